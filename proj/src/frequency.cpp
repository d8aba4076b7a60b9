#include "rbar/frequency.hpp"

#include "rbar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace rbar {

std::shared_ptr<const FrequencyContext> FrequencyContext::create(std::vector<BasisSymbol> basis) {
    std::set<std::string> ids;
    for (const auto& s : basis) {
        if (!ids.insert(s.id).second)
            throw Error("duplicate basis symbol id: " + s.id);
        if (!std::isfinite(s.value) || s.value == 0.0)
            throw Error("basis symbol '" + s.id + "' must have a finite nonzero value");
    }
    return std::shared_ptr<const FrequencyContext>(new FrequencyContext(std::move(basis)));
}

bool FrequencyContext::operator==(const FrequencyContext& other) const {
    if (basis_.size() != other.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].id != other.basis_[i].id || basis_[i].value != other.basis_[i].value)
            return false;
    return true;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw ContextMismatchError("frequency contexts differ");
}

Frequency::Frequency(ContextPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (!ctx_) throw Error("frequency requires a context");
    if (coords_.size() != ctx_->size())
        throw Error("coordinate count does not match context basis size");
    double v = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        v += to_double(coords_[i]) * ctx_->symbol(i).value;
    numeric_ = v;
}

Frequency Frequency::zero(ContextPtr ctx) {
    std::size_t n = ctx->size();
    return Frequency(std::move(ctx), std::vector<Rational>(n));
}

bool Frequency::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

Frequency Frequency::operator+(const Frequency& o) const {
    require_same_context(ctx_, o.ctx_);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Frequency(ctx_, std::move(c));
}

Frequency Frequency::operator-() const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return Frequency(ctx_, std::move(c));
}

Frequency Frequency::scaled(const Rational& s) const {
    std::vector<Rational> c(coords_);
    for (auto& x : c) x *= s;
    return Frequency(ctx_, std::move(c));
}

bool Frequency::operator==(const Frequency& o) const {
    return same_context(ctx_, o.ctx_) && coords_ == o.coords_;
}

bool FrequencyLess::operator()(const Frequency& a, const Frequency& b) const {
    const auto& x = a.coords();
    const auto& y = b.coords();
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

FrequencyTuple::FrequencyTuple(std::vector<Frequency> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("frequency tuple must be nonempty");
    for (std::size_t i = 1; i < entries_.size(); ++i)
        require_same_context(entries_[0].context(), entries_[i].context());
    if (!is_z_independent(entries_))
        throw Error("frequency tuple entries are not Z-independent");
}

bool FrequencyTuple::operator==(const FrequencyTuple& o) const {
    return entries_ == o.entries_;
}

IntegerRelationMatrix IntegerRelationMatrix::composed_with(const IntegerRelationMatrix& outer) const {
    // this: l_j = sum_i n^i_j l'_i (fine x coarse), outer: l'_i over l''.
    if (outer.coarse_size() != fine_size())
        throw Error("relation matrices do not compose");
    IntegerRelationMatrix out(outer.fine_size(), coarse_size());
    for (std::size_t p = 0; p < outer.fine_size(); ++p)
        for (std::size_t j = 0; j < coarse_size(); ++j) {
            Integer acc = 0;
            for (std::size_t i = 0; i < fine_size(); ++i)
                acc += outer.at(p, i) * at(i, j);
            out.at(p, j) = acc;
        }
    return out;
}

namespace {

// Columns of the returned matrix are the coordinate vectors.
RationalMatrix coordinate_columns(const std::vector<Frequency>& freqs) {
    std::size_t dim = freqs.front().context()->size();
    RationalMatrix m(dim, freqs.size());
    for (std::size_t j = 0; j < freqs.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = freqs[j].coords()[i];
    return m;
}

}  // namespace

bool is_z_independent(const std::vector<Frequency>& freqs) {
    if (freqs.empty()) return true;
    for (std::size_t i = 1; i < freqs.size(); ++i)
        require_same_context(freqs[0].context(), freqs[i].context());
    return rational_rank(coordinate_columns(freqs)) == freqs.size();
}

std::optional<IntegerRelationMatrix> solve_span(const FrequencyTuple& L, const FrequencyTuple& Lp) {
    require_same_context(L.context(), Lp.context());
    RationalMatrix basis = coordinate_columns(Lp.entries());
    RationalMatrix targets = coordinate_columns(L.entries());
    auto sol = solve_linear(basis, targets);
    if (!sol) return std::nullopt;
    IntegerRelationMatrix n(Lp.size(), L.size());
    for (std::size_t i = 0; i < Lp.size(); ++i)
        for (std::size_t j = 0; j < L.size(); ++j) {
            const Rational& x = sol->at(i, j);
            if (denominator(x) != 1) return std::nullopt;
            n.at(i, j) = numerator(x);
        }
    return n;
}

std::optional<std::vector<Integer>> integer_coordinates(const Frequency& l, const FrequencyTuple& tuple) {
    require_same_context(l.context(), tuple.context());
    RationalMatrix basis = coordinate_columns(tuple.entries());
    RationalMatrix target(l.context()->size(), 1);
    for (std::size_t i = 0; i < l.coords().size(); ++i) target.at(i, 0) = l.coords()[i];
    auto sol = solve_linear(basis, target);
    if (!sol) return std::nullopt;
    std::vector<Integer> out(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        const Rational& x = sol->at(i, 0);
        if (denominator(x) != 1) return std::nullopt;
        out[i] = numerator(x);
    }
    return out;
}

FrequencyTuple join(const FrequencyTuple& L, const FrequencyTuple& Lp) {
    require_same_context(L.context(), Lp.context());
    ContextPtr ctx = L.context();
    const std::size_t dim = ctx->size();

    std::vector<Frequency> all(L.entries());
    all.insert(all.end(), Lp.entries().begin(), Lp.entries().end());

    // Common denominator of every coordinate, so the generated subgroup of
    // Q^dim becomes (1/D) times an integer lattice.
    Integer common = 1;
    for (const auto& f : all)
        for (const auto& c : f.coords()) common = lcm(common, denominator(c));

    IntMatrix lattice(dim, all.size());
    for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            const Rational& c = all[j].coords()[i];
            lattice.at(i, j) = numerator(c) * (common / denominator(c));
        }

    std::size_t rank = hermite_normal_form(lattice, nullptr);
    std::vector<Frequency> basis;
    basis.reserve(rank);
    for (std::size_t j = 0; j < rank; ++j) {
        std::vector<Rational> coords(dim);
        for (std::size_t i = 0; i < dim; ++i) coords[i] = Rational(lattice.at(i, j), common);
        basis.emplace_back(ctx, std::move(coords));
    }

    // Canonical output order: first nonzero basis index, then coordinates.
    std::sort(basis.begin(), basis.end(), [](const Frequency& a, const Frequency& b) {
        auto lead = [](const Frequency& f) {
            for (std::size_t i = 0; i < f.coords().size(); ++i)
                if (f.coords()[i] != 0) return i;
            return f.coords().size();
        };
        std::size_t la = lead(a), lb = lead(b);
        if (la != lb) return la < lb;
        return FrequencyLess{}(a, b);
    });
    return FrequencyTuple(std::move(basis));
}

std::complex<double> char_eval(const Frequency& l, double x) {
    return std::polar(1.0, l.numeric_value() * x);
}

}  // namespace rbar
