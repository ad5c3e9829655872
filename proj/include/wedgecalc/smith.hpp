#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wedgecalc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row major. Entries are exact arbitrary-precision
/// integers so elimination never overflows.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    BigInt& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct SmithResult {
    std::vector<BigInt> invariant_factors; // positive, each dividing the next
    std::size_t rank = 0;
};

/**
 * Smith normal form by integer row/column reduction, pivoting on the
 * smallest nonzero magnitude. Returns the invariant factors d1 | d2 | ...
 * and the rank.
 */
inline SmithResult smith_normal_form(IntMatrix a) {
    using std::swap;
    SmithResult out;
    if (a.rows == 0 || a.cols == 0) return out;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < a.cols; ++j) swap(a.at(r1, j), a.at(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < a.rows; ++i) swap(a.at(i, c1), a.at(i, c2));
    };

    std::size_t t = 0;
    while (t < a.rows && t < a.cols) {
        // Smallest-magnitude nonzero entry of the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        BigInt best = 0;
        for (std::size_t i = t; i < a.rows; ++i) {
            for (std::size_t j = t; j < a.cols; ++j) {
                const BigInt& v = a.at(i, j);
                if (v == 0) continue;
                BigInt mag = abs(v);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            const BigInt pivot = a.at(t, t);

            // Clear the pivot column; a nonzero remainder beats the pivot
            // in magnitude, so restart with it.
            for (std::size_t i = t + 1; i < a.rows && settled; ++i) {
                if (a.at(i, t) == 0) continue;
                BigInt q = a.at(i, t) / pivot;
                for (std::size_t j = t; j < a.cols; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;

            for (std::size_t j = t + 1; j < a.cols && settled; ++j) {
                if (a.at(t, j) == 0) continue;
                BigInt q = a.at(t, j) / pivot;
                for (std::size_t i = t; i < a.rows; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;

            // Divisibility: the pivot must divide every remaining entry.
            for (std::size_t i = t + 1; i < a.rows && settled; ++i) {
                for (std::size_t j = t + 1; j < a.cols; ++j) {
                    if (a.at(i, j) % pivot != 0) {
                        for (std::size_t c = t; c < a.cols; ++c) a.at(t, c) += a.at(i, c);
                        settled = false;
                        break;
                    }
                }
            }
        }
        ++t;
    }

    out.rank = t;
    out.invariant_factors.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs(a.at(i, i)));
    return out;
}

} // namespace wedgecalc
