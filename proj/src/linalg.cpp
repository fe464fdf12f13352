#include "ortho/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace ortho {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);

        const Rat inv = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] -= factor * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t matrix_rank(RatMatrix m) {
    return rref(m).size();
}

long affine_dimension(const RatMatrix& points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVector d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<long>(matrix_rank(std::move(diffs)));
}

Rat dot(const RatVector& a, const RatVector& b) {
    assert(a.size() == b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void scale_to_coprime_integers(RatVector& v, Rat* attached) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    if (attached) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(*attached));

    Int gcd_num = 0;
    auto fold = [&](const Rat& x) {
        Int n = numerator(x) * (lcm_den / denominator(x));
        gcd_num = boost::multiprecision::gcd(gcd_num, n < 0 ? Int(-n) : n);
    };
    for (const Rat& x : v) fold(x);
    // The attached scalar (an inequality bound) rides along with the same
    // scale but does not participate in the gcd: "x <= 1/2" must stay
    // distinguishable from "2x <= 1" only via the coefficients.
    if (gcd_num == 0) {
        if (attached) {
            if (*attached == 0) return;
            Int n = numerator(*attached) < 0 ? Int(-numerator(*attached)) : numerator(*attached);
            Rat scale(denominator(*attached), n);
            *attached *= scale;
        }
        return;
    }
    const Rat scale(lcm_den, gcd_num);
    for (Rat& x : v) x *= scale;
    if (attached) *attached *= scale;
}

}  // namespace ortho
