#include "graphcoh/sparse_matrix.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>

namespace graphcoh {

SparseExactMatrix::SparseExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

std::size_t SparseExactMatrix::nonzeros() const noexcept
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

void SparseExactMatrix::add(std::size_t row, std::size_t col, const Integer& value)
{
    if (row >= rows_ || col >= columns_.size()) throw ValidationError("matrix index out of range");
    if (value == 0) return;
    auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& entry, std::size_t r) { return entry.first < r; });
    if (it != column.end() && it->first == row) {
        it->second += value;
        if (it->second == 0) column.erase(it);
    } else {
        column.insert(it, {row, value});
    }
}

Integer SparseExactMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& entry, std::size_t r) { return entry.first < r; });
    return (it != column.end() && it->first == row) ? it->second : Integer(0);
}

std::vector<Triplet> SparseExactMatrix::triplets() const
{
    std::vector<Triplet> out;
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) out.push_back(Triplet{r, c, v});
    return out;
}

SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b)
{
    if (a.cols() != b.rows()) throw ValidationError("matrix product with mismatched inner dimension");
    SparseExactMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::size_t, Integer> acc;
        for (const auto& [k, bv] : b.column(c))
            for (const auto& [r, av] : a.column(k)) acc[r] += av * bv;
        for (const auto& [r, v] : acc)
            if (v != 0) out.columns_[c].emplace_back(r, v);
    }
    return out;
}

void SparseExactMatrix::write_triplets(std::ostream& os) const
{
    os << rows_ << ' ' << cols() << ' ' << nonzeros() << '\n';
    for (const Triplet& t : triplets()) os << t.row << ' ' << t.col << ' ' << t.value.get_str() << '\n';
}

namespace {

using Row = std::vector<std::pair<std::size_t, Integer>>;

const Integer* find_entry(const Row& row, std::size_t col)
{
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& entry, std::size_t c) { return entry.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void make_primitive(Row& row)
{
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - a * pivot_row, then divided by its content
void eliminate(Row& target, const Row& pivot_row, const Integer& p, const Integer& a)
{
    Row out;
    out.reserve(target.size() + pivot_row.size());
    auto t = target.begin();
    auto s = pivot_row.begin();
    while (t != target.end() || s != pivot_row.end()) {
        if (s == pivot_row.end() || (t != target.end() && t->first < s->first)) {
            out.emplace_back(t->first, p * t->second);
            ++t;
        } else if (t == target.end() || s->first < t->first) {
            out.emplace_back(s->first, -a * s->second);
            ++s;
        } else {
            Integer v = p * t->second - a * s->second;
            if (v != 0) out.emplace_back(t->first, std::move(v));
            ++t;
            ++s;
        }
    }
    make_primitive(out);
    target = std::move(out);
}

struct Pivot {
    std::size_t row;
    std::size_t col;
};

bool choose_pivot(const std::vector<Row>& rows, const std::vector<char>& is_pivot_row, std::size_t cols,
                  PivotStrategy strategy, Pivot& out)
{
    bool found = false;
    switch (strategy) {
    case PivotStrategy::column_order:
    case PivotStrategy::reverse_column_order: {
        const bool forward = strategy == PivotStrategy::column_order;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (is_pivot_row[r] || rows[r].empty()) continue;
            const std::size_t c = forward ? rows[r].front().first : rows[r].back().first;
            const bool better = !found || (forward ? c < out.col : c > out.col) || (c == out.col && !forward);
            if (better) {
                out = {r, c};
                found = true;
            }
        }
        return found;
    }
    case PivotStrategy::sparsest: {
        std::vector<std::size_t> col_count(cols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!is_pivot_row[r])
                for (const auto& [c, v] : rows[r]) ++col_count[c];
        std::size_t best_score = std::numeric_limits<std::size_t>::max();
        const Integer* best_value = nullptr;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (is_pivot_row[r]) continue;
            for (const auto& [c, v] : rows[r]) {
                const std::size_t score = (rows[r].size() - 1) * (col_count[c] - 1);
                const bool better = !found || score < best_score ||
                                    (score == best_score && mpz_cmpabs(v.get_mpz_t(), best_value->get_mpz_t()) < 0);
                if (better) {
                    out = {r, c};
                    best_score = score;
                    best_value = &v;
                    found = true;
                }
            }
        }
        return found;
    }
    }
    return false;
}

}  // namespace

RankKernel rank_kernel(const SparseExactMatrix& m, PivotStrategy strategy)
{
    std::vector<Row> rows(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, v);
    for (Row& row : rows) make_primitive(row);

    std::vector<char> is_pivot_row(rows.size(), 0);
    std::vector<Pivot> pivots;
    Pivot p{};
    while (choose_pivot(rows, is_pivot_row, m.cols(), strategy, p)) {
        const Row pivot_row = rows[p.row];
        const Integer pivot_value = *find_entry(pivot_row, p.col);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == p.row) continue;
            const Integer* a = find_entry(rows[r], p.col);
            if (a == nullptr) continue;
            const Integer factor = *a;
            eliminate(rows[r], pivot_row, pivot_value, factor);
        }
        is_pivot_row[p.row] = 1;
        pivots.push_back(p);
    }

    RankKernel out;
    out.rank = pivots.size();
    std::vector<char> is_pivot_col(m.cols(), 0);
    for (const Pivot& pv : pivots) is_pivot_col[pv.col] = 1;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot_col[f]) continue;
        Integer scale = 1;
        for (const Pivot& pv : pivots)
            if (find_entry(rows[pv.row], f) != nullptr) {
                const Integer& pval = *find_entry(rows[pv.row], pv.col);
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), pval.get_mpz_t());
            }
        std::vector<Integer> x(m.cols(), 0);
        x[f] = abs(scale);
        for (const Pivot& pv : pivots) {
            const Integer* a = find_entry(rows[pv.row], f);
            if (a == nullptr) continue;
            const Integer& pval = *find_entry(rows[pv.row], pv.col);
            x[pv.col] = -(*a) * x[f] / pval;
        }
        Integer g = 0;
        for (const Integer& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g > 1)
            for (Integer& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        for (const Integer& v : x) {
            if (v == 0) continue;
            if (v < 0)
                for (Integer& w : x) w = -w;
            break;
        }
        out.kernel.push_back(std::move(x));
    }
    return out;
}

std::size_t rank(const SparseExactMatrix& m, PivotStrategy strategy) { return rank_kernel(m, strategy).rank; }

}  // namespace graphcoh
