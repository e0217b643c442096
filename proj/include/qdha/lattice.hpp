#pragma once

#include "qdha/rational.hpp"

namespace qdha {

// A full-rank lattice in Q^n given by generators; the basis is an integral echelon form.
class Lattice {
public:
    Lattice() = default;
    Lattice(const std::vector<RVec>& generators, int dim);

    const std::vector<RVec>& basis() const { return basis_; }
    RVec coordinates(const RVec& v) const;
    bool contains(const RVec& v) const;
    // Canonical representative of v modulo the lattice (coordinates in [0,1)).
    RVec reduce(const RVec& v) const;

private:
    std::vector<RVec> basis_;
    RMat basis_t_;
};

}  // namespace qdha
