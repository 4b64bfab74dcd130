#include "mackit/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mackit {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidArgument("Partition: parts must be positive (entry " +
                                  std::to_string(i + 1) + ")");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("Partition: parts must be weakly decreasing (entry " +
                                  std::to_string(i + 1) + ")");
    }
}

Partition::Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::part(long i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

long Partition::multiplicity(long value) const {
    return std::count(parts_.begin(), parts_.end(), value);
}

Partition Partition::conjugate() const {
    std::vector<long> out;
    for (long j = 1; j <= max_part(); ++j) {
        long h = 0;
        for (long p : parts_)
            if (p >= j) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

long Partition::n_stat() const {
    long n = 0;
    for (size_t i = 0; i < parts_.size(); ++i) n += static_cast<long>(i) * parts_[i];
    return n;
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<long> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    std::sort(v.begin(), v.end(), std::greater<long>());
    return Partition(std::move(v));
}

Partition Partition::repeat_parts(long l) const {
    if (l < 0) throw InvalidArgument("repeat_parts: negative repetition");
    std::vector<long> v;
    for (long p : parts_)
        for (long i = 0; i < l; ++i) v.push_back(p);
    std::sort(v.begin(), v.end(), std::greater<long>());
    return Partition(std::move(v));
}

Partition Partition::rectangle(long r, long l) {
    if (r < 0 || l < 0) throw InvalidArgument("rectangle: negative dimensions");
    if (r == 0 || l == 0) return Partition();
    return Partition(std::vector<long>(static_cast<size_t>(l), r));
}

bool Partition::contains_cell(const Cell& s) const {
    return s.row >= 1 && s.col >= 1 && s.col <= part(s.row);
}

bool Partition::contains(const Partition& inner) const {
    for (long i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (long i = 1; i <= length(); ++i)
        for (long j = 1; j <= part(i); ++j) out.push_back(Cell{i, j});
    return out;
}

CellStats Partition::cell_stats(const Cell& s) const {
    if (!contains_cell(s))
        throw CellOutsideDiagram("cell (" + std::to_string(s.row) + "," +
                                 std::to_string(s.col) + ") outside " + to_string());
    CellStats st;
    st.arm = part(s.row) - s.col;
    st.arm_colength = s.col - 1;
    long col_height = 0;
    for (long p : parts_)
        if (p >= s.col) ++col_height;
    st.leg = col_height - s.row;
    st.leg_colength = s.row - 1;
    return st;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw WeightMismatch("dominance: |" + a.to_string() + "| != |" + b.to_string() + "|");
    long sa = 0, sb = 0;
    const long n = std::max(a.length(), b.length());
    for (long i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool canonical_less(const Partition& a, const Partition& b) {
    const long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    // Reverse-lexicographic: the first differing part decides, larger first.
    const long n = std::max(a.length(), b.length());
    for (long i = 1; i <= n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

namespace {

std::mutex g_parts_mutex;
std::map<long, std::vector<Partition>> g_parts_cache;

void gen_partitions(long remaining, long max_part, std::vector<long>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(long n) {
    if (n < 0) throw InvalidArgument("partitions_of: negative weight");
    {
        std::lock_guard<std::mutex> lk(g_parts_mutex);
        auto it = g_parts_cache.find(n);
        if (it != g_parts_cache.end()) return it->second;
    }
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
    } else {
        std::vector<long> acc;
        gen_partitions(n, n, acc, out);
    }
    std::lock_guard<std::mutex> lk(g_parts_mutex);
    return g_parts_cache.emplace(n, std::move(out)).first->second;
}

long partition_index(const Partition& lambda) {
    const auto& list = partitions_of(lambda.weight());
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == lambda) return static_cast<long>(i);
    throw Error("partition_index: not found (internal)");
}

HorizontalStrip::HorizontalStrip(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!is_horizontal_strip(outer, inner))
        throw InvalidStrip(outer.to_string() + "/" + inner.to_string() +
                           " is not a horizontal strip");
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    // Interlacing: outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    for (long i = 1; i <= outer.length(); ++i) {
        if (i > 1 && inner.part(i - 1) < outer.part(i)) return false;
    }
    return true;
}

std::vector<Partition> horizontal_strips(const Partition& mu, long r) {
    if (r < 0) throw InvalidArgument("horizontal_strips: negative strip size");
    std::vector<Partition> out;
    // Row-by-row construction: lambda_i in [mu_i, mu_{i-1}], one optional
    // extra row below of size <= mu_last.
    const long rows = mu.length() + 1;
    std::vector<long> acc;
    std::function<void(long, long)> rec = [&](long i, long rem) {
        if (i > rows) {
            if (rem == 0) {
                std::vector<long> v;
                for (long p : acc)
                    if (p > 0) v.push_back(p);
                out.emplace_back(Partition(std::move(v)));
            }
            return;
        }
        const long lo = mu.part(i);
        const long hi = (i == 1) ? mu.part(1) + r : mu.part(i - 1);
        for (long v = lo; v <= std::min(hi, lo + rem); ++v) {
            acc.push_back(v);
            rec(i + 1, rem - (v - lo));
            acc.pop_back();
        }
    };
    rec(1, r);
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cell> strip_D_set(const HorizontalStrip& strip) {
    const Partition& lam = strip.outer;
    const Partition& mu = strip.inner;
    std::vector<bool> row_hits(static_cast<size_t>(lam.length() + 1), false);
    std::vector<bool> col_hits(static_cast<size_t>(lam.max_part() + 1), false);
    for (long i = 1; i <= lam.length(); ++i) {
        for (long j = mu.part(i) + 1; j <= lam.part(i); ++j) {
            row_hits[static_cast<size_t>(i)] = true;
            col_hits[static_cast<size_t>(j)] = true;
        }
    }
    std::vector<Cell> out;
    for (long i = 1; i <= lam.length(); ++i) {
        if (!row_hits[static_cast<size_t>(i)]) continue;
        for (long j = 1; j <= lam.part(i); ++j) {
            if (!col_hits[static_cast<size_t>(j)]) out.push_back(Cell{i, j});
        }
    }
    return out;
}

std::pair<long, long> strip_row_interval(const HorizontalStrip& strip, long row) {
    const long lo = strip.inner.part(row) + 1;
    const long hi = strip.outer.part(row);
    if (lo > hi) return {0, -1};
    return {lo, hi};
}

} // namespace mackit
