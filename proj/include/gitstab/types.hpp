#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gitstab/numbers.hpp"

namespace gitstab {

/// Raised on malformed user input (bad signature, weights, support files).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computations of the same fact disagree.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Factor dimensions (m_1,...,m_r) and multidegree (k_1,...,k_r) of divisors
/// in P^{m_1} x ... x P^{m_r}. Fixes the whole combinatorial universe.
class SpaceSignature {
public:
    SpaceSignature(std::vector<int> dims, std::vector<int> degrees);

    const std::vector<int>& dims() const { return dims_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int factors() const { return static_cast<int>(dims_.size()); }

    /// Ambient weight dimension D = sum (m_i + 1).
    int ambient_dim() const { return ambient_; }
    /// Projected lattice dimension d = sum m_i.
    int projected_dim() const { return projected_; }

    int block_offset(int t) const { return offsets_[static_cast<size_t>(t)]; }
    int block_size(int t) const { return dims_[static_cast<size_t>(t)] + 1; }

    bool operator==(const SpaceSignature& o) const {
        return dims_ == o.dims_ && degrees_ == o.degrees_;
    }
    bool operator!=(const SpaceSignature& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<int> dims_;
    std::vector<int> degrees_;
    std::vector<int> offsets_;
    int ambient_ = 0;
    int projected_ = 0;
};

/// One monomial of Xi: concatenated per-factor exponent blocks, block t of
/// length m_t + 1 summing to degrees[t].
class ExponentVector {
public:
    static ExponentVector checked(const SpaceSignature& sig, std::vector<int> exps);

    const std::vector<int>& exps() const { return exps_; }
    int operator[](size_t i) const { return exps_[i]; }
    size_t size() const { return exps_.size(); }

    bool operator==(const ExponentVector& o) const { return exps_ == o.exps_; }
    bool operator<(const ExponentVector& o) const { return exps_ < o.exps_; }

    /// Human-readable monomial, factor variables x, y, z, w, ...
    std::string to_string(const SpaceSignature& sig) const;

private:
    friend std::vector<ExponentVector> enumerate_monomials(const SpaceSignature&);
    explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {}
    std::vector<int> exps_;
};

/// Integer point of the projected exponent lattice (last exponent of each
/// block dropped).
struct LatticePoint {
    std::vector<int> coords;
    bool operator==(const LatticePoint& o) const { return coords == o.coords; }
    bool operator<(const LatticePoint& o) const { return coords < o.coords; }
};

/// Exact-rational point of the projected lattice's ambient space.
struct RationalPoint {
    std::vector<Rat> coords;
    bool operator==(const RationalPoint& o) const { return coords == o.coords; }
};

/// A normalised one-parameter subgroup of the diagonal torus: primitive
/// integer weights in per-factor blocks, each block non-increasing and
/// zero-sum, not all zero. Construct via checked() or oneps normalize().
class OneParamSubgroup {
public:
    static OneParamSubgroup checked(const SpaceSignature& sig,
                                    std::vector<std::vector<Int>> blocks);
    /// Invariant-checking is the caller's duty; used by the enumeration core.
    static OneParamSubgroup unchecked(std::vector<std::vector<Int>> blocks);

    const std::vector<std::vector<Int>>& blocks() const { return blocks_; }
    std::vector<Int> flat() const;

    bool operator==(const OneParamSubgroup& o) const { return blocks_ == o.blocks_; }
    bool operator<(const OneParamSubgroup& o) const { return blocks_ < o.blocks_; }

    std::string to_string() const;

private:
    explicit OneParamSubgroup(std::vector<std::vector<Int>> blocks)
        : blocks_(std::move(blocks)) {}
    std::vector<std::vector<Int>> blocks_;
};

/// A wall normal: primitive, sign-canonical integer vector of length D,
/// blockwise zero-sum, block-t entries within [-k_t, k_t].
struct HyperplaneNormal {
    std::vector<int> coeffs;
    bool operator==(const HyperplaneNormal& o) const { return coeffs == o.coeffs; }
    bool operator<(const HyperplaneNormal& o) const { return coeffs < o.coeffs; }
};

/// Exact-rational affine map on the projected lattice:
/// value(p) = linear . p + constant.
struct AffineFunctional {
    std::vector<Rat> linear;
    Rat constant;

    Rat value(const std::vector<Rat>& p) const;
    Rat value(const LatticePoint& p) const;
    bool operator==(const AffineFunctional& o) const {
        return linear == o.linear && constant == o.constant;
    }
    std::string to_string() const;
};

}  // namespace gitstab
