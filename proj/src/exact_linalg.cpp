#include "rbar/exact_linalg.hpp"

#include "rbar/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rbar {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw Error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw Error("cannot parse rational: '" + text + "'");
    }
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t rational_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / m.at(rank, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

std::optional<RationalMatrix> solve_linear(const RationalMatrix& a, const RationalMatrix& targets) {
    const std::size_t n = a.rows(), k = a.cols(), t = targets.cols();
    RationalMatrix aug(n, k + t);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < t; ++c) aug.at(r, k + c) = targets.at(r, c);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t p = row;
        while (p < n && aug.at(p, col) == 0) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t c = 0; c < k + t; ++c) std::swap(aug.at(p, c), aug.at(row, c));
        Rational inv = aug.at(row, col);
        for (std::size_t c = col; c < k + t; ++c) aug.at(row, c) /= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug.at(r, col) == 0) continue;
            Rational f = aug.at(r, col);
            for (std::size_t c = col; c < k + t; ++c) aug.at(r, c) -= f * aug.at(row, c);
        }
        pivot_col.push_back(col);
        ++row;
    }

    // Inconsistent when a zero row of A meets a nonzero target entry.
    for (std::size_t r = row; r < n; ++r)
        for (std::size_t c = 0; c < t; ++c)
            if (aug.at(r, k + c) != 0) return std::nullopt;

    RationalMatrix x(k, t);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        for (std::size_t c = 0; c < t; ++c) x.at(pivot_col[i], c) = aug.at(i, k + c);
    return x;
}

namespace {

void negate_column(IntMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
}

void swap_columns(IntMatrix& m, std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

// col(dst) -= q * col(src)
void axpy_column(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) -= q * m.at(r, src);
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::size_t hermite_normal_form(IntMatrix& a, IntMatrix* u) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (u) *u = IntMatrix::identity(cols);
    std::size_t pivot = 0;
    for (std::size_t row = 0; row < rows && pivot < cols; ++row) {
        // Reduce row entries at columns >= pivot to a single nonzero via gcd steps.
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot; c < cols; ++c) {
                if (a.at(row, c) == 0) continue;
                if (best == cols || abs(a.at(row, c)) < abs(a.at(row, best))) best = c;
            }
            if (best == cols) break;  // row has no pivot; move to next row
            if (best != pivot) {
                swap_columns(a, pivot, best);
                if (u) swap_columns(*u, pivot, best);
            }
            if (a.at(row, pivot) < 0) {
                negate_column(a, pivot);
                if (u) negate_column(*u, pivot);
            }
            bool clean = true;
            for (std::size_t c = pivot + 1; c < cols; ++c) {
                if (a.at(row, c) == 0) continue;
                Integer q = floor_div(a.at(row, c), a.at(row, pivot));
                axpy_column(a, c, q, pivot);
                if (u) axpy_column(*u, c, q, pivot);
                if (a.at(row, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot < cols && a.at(row, pivot) != 0) {
            // Canonical form: entries left of the pivot reduced into [0, pivot).
            for (std::size_t c = 0; c < pivot; ++c) {
                Integer q = floor_div(a.at(row, c), a.at(row, pivot));
                if (q == 0) continue;
                axpy_column(a, c, q, pivot);
                if (u) axpy_column(*u, c, q, pivot);
            }
            ++pivot;
        }
    }
    return pivot;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u(0, 0);
    std::size_t rank = hermite_normal_form(h, &u);
    IntMatrix kernel(a.cols(), a.cols() - rank);
    for (std::size_t j = rank; j < a.cols(); ++j)
        for (std::size_t r = 0; r < a.cols(); ++r) kernel.at(r, j - rank) = u.at(r, j);
    return kernel;
}

}  // namespace rbar
