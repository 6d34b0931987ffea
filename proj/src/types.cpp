#include "gitstab/types.hpp"

#include <numeric>
#include <sstream>

namespace gitstab {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw validation_error("rational with zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw validation_error("cannot parse rational: " + s);
    }
}

Int content(const std::vector<std::vector<Int>>& blocks) {
    Int g = 0;
    for (const auto& b : blocks)
        for (const auto& x : b) g = int_gcd(g, x);
    return g;
}

SpaceSignature::SpaceSignature(std::vector<int> dims, std::vector<int> degrees)
    : dims_(std::move(dims)), degrees_(std::move(degrees)) {
    if (dims_.empty() || dims_.size() != degrees_.size())
        throw validation_error("signature needs equally many dims and degrees, at least one factor");
    for (int m : dims_)
        if (m <= 0) throw validation_error("factor dimensions must be positive");
    for (int k : degrees_)
        if (k <= 0) throw validation_error("degrees must be positive");
    offsets_.reserve(dims_.size());
    for (int m : dims_) {
        offsets_.push_back(ambient_);
        ambient_ += m + 1;
        projected_ += m;
    }
}

std::string SpaceSignature::to_string() const {
    std::ostringstream os;
    for (size_t t = 0; t < dims_.size(); ++t) {
        if (t) os << " x ";
        os << "P^" << dims_[t];
    }
    os << ", degree (";
    for (size_t t = 0; t < degrees_.size(); ++t) {
        if (t) os << ",";
        os << degrees_[t];
    }
    os << ")";
    return os.str();
}

ExponentVector ExponentVector::checked(const SpaceSignature& sig, std::vector<int> exps) {
    if (static_cast<int>(exps.size()) != sig.ambient_dim())
        throw validation_error("exponent vector has wrong length for signature");
    for (int t = 0; t < sig.factors(); ++t) {
        int sum = 0;
        for (int i = 0; i < sig.block_size(t); ++i) {
            int e = exps[static_cast<size_t>(sig.block_offset(t) + i)];
            if (e < 0) throw validation_error("negative exponent");
            sum += e;
        }
        if (sum != sig.degrees()[static_cast<size_t>(t)])
            throw validation_error("exponent block does not sum to the factor degree");
    }
    return ExponentVector(std::move(exps));
}

namespace {
constexpr char kFactorLetters[] = "xyzwuvabcdefgh";
}

std::string ExponentVector::to_string(const SpaceSignature& sig) const {
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < sig.factors(); ++t) {
        char letter = kFactorLetters[static_cast<size_t>(t) % (sizeof(kFactorLetters) - 1)];
        for (int i = 0; i < sig.block_size(t); ++i) {
            int e = exps_[static_cast<size_t>(sig.block_offset(t) + i)];
            if (e == 0) continue;
            if (!first) os << "*";
            first = false;
            os << letter << i;
            if (e > 1) os << "^" << e;
        }
    }
    if (first) os << "1";
    return os.str();
}

OneParamSubgroup OneParamSubgroup::checked(const SpaceSignature& sig,
                                           std::vector<std::vector<Int>> blocks) {
    if (static_cast<int>(blocks.size()) != sig.factors())
        throw validation_error("subgroup has wrong number of weight blocks");
    bool nontrivial = false;
    for (int t = 0; t < sig.factors(); ++t) {
        const auto& b = blocks[static_cast<size_t>(t)];
        if (static_cast<int>(b.size()) != sig.block_size(t))
            throw validation_error("weight block has wrong length");
        Int sum = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            if (i + 1 < b.size() && b[i] < b[i + 1])
                throw validation_error("weight block is not non-increasing");
            if (b[i] != 0) nontrivial = true;
            sum += b[i];
        }
        if (sum != 0) throw validation_error("weight block does not sum to zero");
    }
    if (!nontrivial) throw validation_error("trivial one-parameter subgroup");
    if (content(blocks) != 1) throw validation_error("weights are not primitive");
    return OneParamSubgroup(std::move(blocks));
}

OneParamSubgroup OneParamSubgroup::unchecked(std::vector<std::vector<Int>> blocks) {
    return OneParamSubgroup(std::move(blocks));
}

std::vector<Int> OneParamSubgroup::flat() const {
    std::vector<Int> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string OneParamSubgroup::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t t = 0; t < blocks_.size(); ++t) {
        if (t) os << " | ";
        for (size_t i = 0; i < blocks_[t].size(); ++i) {
            if (i) os << ",";
            os << blocks_[t][i].str();
        }
    }
    os << ")";
    return os.str();
}

Rat AffineFunctional::value(const std::vector<Rat>& p) const {
    if (p.size() != linear.size())
        throw validation_error("functional applied to point of wrong dimension");
    Rat acc = constant;
    for (size_t i = 0; i < p.size(); ++i) acc += linear[i] * p[i];
    return acc;
}

Rat AffineFunctional::value(const LatticePoint& p) const {
    std::vector<Rat> q(p.coords.begin(), p.coords.end());
    return value(q);
}

std::string AffineFunctional::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < linear.size(); ++i) {
        if (i) os << " + ";
        os << "(" << rat_to_string(linear[i]) << ")*t" << i;
    }
    os << " + (" << rat_to_string(constant) << ")";
    return os.str();
}

}  // namespace gitstab
