#pragma once

#include "rbar/exact_linalg.hpp"
#include "rbar/rational.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rbar {

// Real frequencies are restricted to a finitely generated Q-vector space
// with a declared symbolic basis.  This keeps Z-independence decidable by
// exact elimination; the numeric values enter only when characters are
// evaluated at real points.

struct BasisSymbol {
    std::string id;
    double value;  // finite, nonzero
};

class FrequencyContext {
public:
    static std::shared_ptr<const FrequencyContext> create(std::vector<BasisSymbol> basis);

    std::size_t size() const { return basis_.size(); }
    const BasisSymbol& symbol(std::size_t i) const { return basis_[i]; }
    bool operator==(const FrequencyContext& other) const;

private:
    explicit FrequencyContext(std::vector<BasisSymbol> basis) : basis_(std::move(basis)) {}
    std::vector<BasisSymbol> basis_;
};

using ContextPtr = std::shared_ptr<const FrequencyContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// An exact rational coordinate vector over the context basis.  The zero
/// vector is the trivial character.
class Frequency {
public:
    Frequency(ContextPtr ctx, std::vector<Rational> coords);
    static Frequency zero(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;

    /// Floating reconstruction sum_i coords_i * basis_value_i.
    double numeric_value() const { return numeric_; }

    Frequency operator+(const Frequency& o) const;
    Frequency operator-() const;
    Frequency scaled(const Rational& s) const;
    bool operator==(const Frequency& o) const;

private:
    ContextPtr ctx_;
    std::vector<Rational> coords_;
    double numeric_;
};

/// Strict weak order on coordinate vectors, used for map keys.
struct FrequencyLess {
    bool operator()(const Frequency& a, const Frequency& b) const;
};

/// Ordered tuple of Z-independent frequencies; an element of the directed
/// index set (I, <=_Z).
class FrequencyTuple {
public:
    explicit FrequencyTuple(std::vector<Frequency> entries);

    std::size_t size() const { return entries_.size(); }
    const Frequency& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Frequency>& entries() const { return entries_; }
    const ContextPtr& context() const { return entries_.front().context(); }
    bool operator==(const FrequencyTuple& o) const;

private:
    std::vector<Frequency> entries_;
};

/// Exponents n^i_j with l_j = sum_i n^i_j l'_i.  Row i indexes the fine
/// tuple L', column j the coarse tuple L.
class IntegerRelationMatrix {
public:
    IntegerRelationMatrix(std::size_t fine, std::size_t coarse)
        : m_(fine, coarse) {}

    std::size_t fine_size() const { return m_.rows(); }
    std::size_t coarse_size() const { return m_.cols(); }
    Integer& at(std::size_t i, std::size_t j) { return m_.at(i, j); }
    const Integer& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    /// Matrix of the composed relation: this solves (L, L'), `outer` solves
    /// (L', L''); the result solves (L, L'').
    IntegerRelationMatrix composed_with(const IntegerRelationMatrix& outer) const;

private:
    IntMatrix m_;
};

/// True iff the rational coordinate vectors are linearly independent over Q
/// (equivalently, the reals they encode are Z-independent).
bool is_z_independent(const std::vector<Frequency>& freqs);

/// The unique integer matrix with l_j = sum_i n^i_j l'_i, or nullopt when
/// some l_j is outside span_Z(L').
std::optional<IntegerRelationMatrix> solve_span(const FrequencyTuple& L, const FrequencyTuple& Lp);

/// Integer coordinates of a single frequency in span_Z(tuple); the zero
/// frequency yields the zero vector.
std::optional<std::vector<Integer>> integer_coordinates(const Frequency& l, const FrequencyTuple& tuple);

/// A common refinement: L <=_Z join(L, L') and L' <=_Z join(L, L'), with
/// span_Z equal to the subgroup generated by both tuples.  Computed by
/// clearing denominators and extracting a lattice basis in Hermite form;
/// output order is canonical (leading basis index, then coordinates).
FrequencyTuple join(const FrequencyTuple& L, const FrequencyTuple& Lp);

/// chi_l(x) = e^{i l x}, modulus exactly 1.
std::complex<double> char_eval(const Frequency& l, double x);

}  // namespace rbar
