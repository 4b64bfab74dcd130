#ifndef MACKIT_PARTITION_HPP
#define MACKIT_PARTITION_HPP

#include <string>
#include <vector>

#include "mackit/errors.hpp"

namespace mackit {

// Cell (i, j) of a Young diagram: row i, column j, both 1-based.
struct Cell {
    long row = 1;
    long col = 1;
    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
};

struct CellStats {
    long arm = 0;         // a(s)  = lambda_i - j
    long arm_colength = 0; // a'(s) = j - 1
    long leg = 0;         // l(s)  = lambda'_j - i
    long leg_colength = 0; // l'(s) = i - 1
};

// Integer partition: weakly decreasing positive parts.  The empty
// partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long weight() const;
    long length() const { return static_cast<long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long part(long i) const;  // 1-based; 0 beyond the length
    long multiplicity(long value) const;
    long max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    Partition conjugate() const;
    // n(lambda) = sum (i-1) lambda_i
    long n_stat() const;
    // Multiset union of parts, re-sorted decreasing.
    Partition union_with(const Partition& other) const;
    // Partition with every part repeated l times (the paper's nu^l).
    Partition repeat_parts(long l) const;
    // Rectangle (r^l): l parts equal to r (empty when r == 0 or l == 0).
    static Partition rectangle(long r, long l);

    bool contains_cell(const Cell& s) const;
    bool contains(const Partition& inner) const;  // diagram containment
    std::vector<Cell> cells() const;

    CellStats cell_stats(const Cell& s) const;  // throws CellOutsideDiagram

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const;  // "(3,1,1)", "()" for empty

private:
    std::vector<long> parts_;
};

// Dominance order on partitions of equal weight; throws WeightMismatch.
bool dominance_leq(const Partition& a, const Partition& b);

// Canonical total order: by weight, then reverse-lexicographic within a
// weight ((n) first, (1^n) last).  A linear extension of dominance.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

// All partitions of n in canonical (reverse-lexicographic) order.
const std::vector<Partition>& partitions_of(long n);

// Index of lambda within partitions_of(weight).
long partition_index(const Partition& lambda);

// Skew shape outer/inner with at most one cell per column.
struct HorizontalStrip {
    Partition outer;
    Partition inner;
    HorizontalStrip(Partition out, Partition in);  // throws InvalidStrip
    long size() const { return outer.weight() - inner.weight(); }
};

bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// All lambda containing mu with |lambda| - |mu| = r and lambda/mu a
// horizontal strip, in canonical order.
std::vector<Partition> horizontal_strips(const Partition& mu, long r);

// D(lambda/mu): cells of lambda lying in a row that meets the strip but in
// no column that meets it.  This is the cell set of Macdonald's psi product.
std::vector<Cell> strip_D_set(const HorizontalStrip& strip);

// Column interval (J_s) of the strip component in a given row; empty when
// the row does not meet the strip.
std::pair<long, long> strip_row_interval(const HorizontalStrip& strip, long row);

} // namespace mackit

#endif
