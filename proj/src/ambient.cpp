#include "confdunkl/ambient.hpp"

#include <cmath>

namespace confdunkl {

int exact_rank(std::vector<std::vector<Exact>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        Exact inv = rows[row][col].inverse();
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            Exact f = rows[r][col] * inv;
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

AmbientVector<double> to_tilde(const AmbientVector<double>& x) {
    const double s = 1.0 / std::sqrt(2.0);
    AmbientVector<double> r(x.size());
    r[0] = s * (x.c.front() + x.c.back());
    for (std::size_t i = 1; i + 1 < x.size(); ++i) r[i] = x[i];
    r[x.size() - 1] = s * (x.c.front() - x.c.back());
    return r;
}

AmbientVector<double> from_tilde(const AmbientVector<double>& x) {
    const double s = 1.0 / std::sqrt(2.0);
    AmbientVector<double> r(x.size());
    r[0] = s * (x.c.front() + x.c.back());
    for (std::size_t i = 1; i + 1 < x.size(); ++i) r[i] = x[i];
    r[x.size() - 1] = s * (x.c.front() - x.c.back());
    return r;
}

}  // namespace confdunkl
