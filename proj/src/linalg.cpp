#include "gitstab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gitstab::linalg {

void Echelon::reduce(std::vector<Rat>& row) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = row[static_cast<size_t>(pivots_[r])];
        if (c == 0) continue;
        Rat f = c;  // pivot entries are normalized to 1
        for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] -= f * rows_[r][static_cast<size_t>(j)];
    }
}

bool Echelon::add(std::vector<Rat> row) {
    reduce(row);
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (row[static_cast<size_t>(j)] != 0) { pivot = j; break; }
    if (pivot < 0) return false;
    Rat pv = row[static_cast<size_t>(pivot)];
    for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] /= pv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rat f = rows_[r][static_cast<size_t>(pivot)];
        if (f == 0) continue;
        for (int j = 0; j < cols_; ++j)
            rows_[r][static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), pivot);
    return true;
}

bool Echelon::spans(std::vector<Rat> row) const {
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
}

std::optional<std::vector<Int>> Echelon::kernel_direction() const {
    if (rank() != cols_ - 1) return std::nullopt;
    int free_col = -1;
    {
        size_t r = 0;
        for (int j = 0; j < cols_; ++j) {
            if (r < pivots_.size() && pivots_[r] == j) { ++r; continue; }
            free_col = j;
            break;
        }
    }
    std::vector<Rat> v(static_cast<size_t>(cols_), Rat(0));
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t r = 0; r < rows_.size(); ++r)
        v[static_cast<size_t>(pivots_[r])] = -rows_[r][static_cast<size_t>(free_col)];
    return primitive_integer(v);
}

std::string Echelon::signature() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_.size(); ++r) {
        os << pivots_[r] << ":";
        for (int j = 0; j < cols_; ++j) os << rat_to_string(rows_[r][static_cast<size_t>(j)]) << ",";
        os << ";";
    }
    return os.str();
}

int rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    Echelon e(static_cast<int>(rows.front().size()));
    for (auto& r : rows) e.add(std::move(r));
    return e.rank();
}

std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& x : v) den = int_lcm(den, rat_den(x));
    std::vector<Int> out;
    out.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        Int e = rat_num(x) * (den / rat_den(x));
        g = int_gcd(g, e);
        out.push_back(std::move(e));
    }
    if (g > 1)
        for (auto& e : out) e /= g;
    return out;
}

}  // namespace gitstab::linalg
