#include "prism/pattern.hpp"

#include "prism/errors.hpp"

#include <algorithm>
#include <utility>

namespace prism {

MeshPattern::MeshPattern(Permutation pattern, std::set<Cell> mesh)
    : pattern_(std::move(pattern)), mesh_(std::move(mesh))
{
    const int k = pattern_.size();
    for (const Cell& cell : mesh_)
        if (cell.a < 0 || cell.a > k || cell.b < 0 || cell.b > k)
            throw invalid_input("mesh cell (" + std::to_string(cell.a) + "," + std::to_string(cell.b) +
                                ") outside [0," + std::to_string(k) + "]^2");
}

namespace {

void check_pins(const std::map<int, int>& pins, int k, const char* what)
{
    int previous = 0;
    for (const auto& [key, target] : pins) {
        if (key < 1 || key > k)
            throw invalid_input(std::string(what) + ": key " + std::to_string(key) + " outside [1," +
                                std::to_string(k) + "]");
        if (target <= previous)
            throw invalid_input(std::string(what) + ": pinned targets must be positive and strictly increasing");
        previous = target;
    }
}

} // namespace

CalibratedMeshPattern::CalibratedMeshPattern(MeshPattern base, std::map<int, int> pos_cal,
                                             std::map<int, int> val_cal, std::string name)
    : base_(std::move(base)), pos_cal_(std::move(pos_cal)), val_cal_(std::move(val_cal)), name_(std::move(name))
{
    check_pins(pos_cal_, base_.size(), "pos_cal");
    check_pins(val_cal_, base_.size(), "val_cal");
}

CalibratedMeshPattern classical(const Permutation& p)
{
    return CalibratedMeshPattern(MeshPattern(p));
}

namespace {

// Backtracking over increasing position tuples. Order-isomorphism and pins are
// checked as each column is placed; shaded cells once the tuple is complete.
class Matcher {
public:
    Matcher(const Permutation& w, const CalibratedMeshPattern& c)
        : w_(w), p_(c.base().pattern()), mesh_(c.base().mesh()), n_(w.size()), k_(c.size()),
          x_(static_cast<std::size_t>(k_) + 2, 0), pos_pin_(static_cast<std::size_t>(k_) + 1, 0),
          val_pin_(static_cast<std::size_t>(k_) + 1, 0), column_of_rank_(static_cast<std::size_t>(k_) + 1, 0)
    {
        feasible_ = k_ <= n_;
        for (const auto& [column, position] : c.pos_cal()) {
            if (position > n_)
                feasible_ = false;
            pos_pin_[static_cast<std::size_t>(column)] = position;
        }
        for (int j = 1; j <= k_; ++j)
            column_of_rank_[static_cast<std::size_t>(p_(j))] = j;
        for (const auto& [rank, value] : c.val_cal()) {
            if (value > n_)
                feasible_ = false;
            val_pin_[static_cast<std::size_t>(column_of_rank_[static_cast<std::size_t>(rank)])] = value;
        }
        x_[static_cast<std::size_t>(k_) + 1] = n_ + 1;
    }

    // Calls visit(positions) for each occurrence until visit returns false.
    template <class Visit>
    void run(Visit&& visit)
    {
        if (feasible_)
            place(1, 1, visit);
    }

private:
    template <class Visit>
    bool place(int j, int start, Visit& visit)
    {
        if (j > k_) {
            if (!mesh_clear())
                return true;
            return visit(x_);
        }
        const int pinned = pos_pin_[static_cast<std::size_t>(j)];
        const int lo = pinned ? pinned : start;
        const int hi = pinned ? pinned : n_ - (k_ - j);
        for (int x = std::max(lo, start); x <= hi; ++x) {
            if (!fits(j, x))
                continue;
            x_[static_cast<std::size_t>(j)] = x;
            if (!place(j + 1, x + 1, visit))
                return false;
        }
        return true;
    }

    bool fits(int j, int x) const
    {
        const int value = w_(x);
        const int pinned = val_pin_[static_cast<std::size_t>(j)];
        if (pinned && value != pinned)
            return false;
        for (int m = 1; m < j; ++m)
            if ((p_(m) < p_(j)) != (w_(x_[static_cast<std::size_t>(m)]) < value))
                return false;
        return true;
    }

    bool mesh_clear() const
    {
        auto y = [&](int rank) {
            if (rank == 0)
                return 0;
            if (rank == k_ + 1)
                return n_ + 1;
            return w_(x_[static_cast<std::size_t>(column_of_rank_[static_cast<std::size_t>(rank)])]);
        };
        for (const Cell& cell : mesh_) {
            const int lo_value = y(cell.b);
            const int hi_value = y(cell.b + 1);
            for (int t = x_[static_cast<std::size_t>(cell.a)] + 1; t < x_[static_cast<std::size_t>(cell.a) + 1]; ++t)
                if (lo_value < w_(t) && w_(t) < hi_value)
                    return false;
        }
        return true;
    }

    const Permutation& w_;
    const Permutation& p_;
    const std::set<Cell>& mesh_;
    int n_;
    int k_;
    bool feasible_ = true;
    std::vector<int> x_; // x_[0] = 0 and x_[k+1] = n+1 are sentinels
    std::vector<int> pos_pin_;
    std::vector<int> val_pin_; // indexed by column
    std::vector<int> column_of_rank_;
};

Occurrence make_occurrence(const Permutation& w, const std::vector<int>& x, int k)
{
    Occurrence occ;
    for (int j = 1; j <= k; ++j) {
        occ.positions.push_back(x[static_cast<std::size_t>(j)]);
        occ.values.push_back(w(x[static_cast<std::size_t>(j)]));
    }
    return occ;
}

} // namespace

std::vector<Occurrence> occurrences(const Permutation& w, const CalibratedMeshPattern& c)
{
    std::vector<Occurrence> out;
    Matcher(w, c).run([&](const std::vector<int>& x) {
        out.push_back(make_occurrence(w, x, c.size()));
        return true;
    });
    return out;
}

std::optional<Occurrence> first_occurrence(const Permutation& w, const CalibratedMeshPattern& c)
{
    std::optional<Occurrence> out;
    Matcher(w, c).run([&](const std::vector<int>& x) {
        out = make_occurrence(w, x, c.size());
        return false;
    });
    return out;
}

bool contains(const Permutation& w, const CalibratedMeshPattern& c)
{
    bool found = false;
    Matcher(w, c).run([&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

namespace {

std::set<Cell> row_band(int b, int k)
{
    std::set<Cell> out;
    for (int a = 0; a <= k; ++a)
        out.insert({a, b});
    return out;
}

std::set<Cell> column_band(int a, int k)
{
    std::set<Cell> out;
    for (int b = 0; b <= k; ++b)
        out.insert({a, b});
    return out;
}

std::set<Cell> block(int a_lo, int a_hi, int b_lo, int b_hi)
{
    std::set<Cell> out;
    for (int a = a_lo; a <= a_hi; ++a)
        for (int b = b_lo; b <= b_hi; ++b)
            out.insert({a, b});
    return out;
}

std::set<Cell> unite(std::initializer_list<std::set<Cell>> parts)
{
    std::set<Cell> out;
    for (const auto& part : parts)
        out.insert(part.begin(), part.end());
    return out;
}

CalibratedMeshPattern pinned(const char* pattern, std::set<Cell> mesh, int column_and_rank, int target,
                             std::string name)
{
    return CalibratedMeshPattern(MeshPattern(parse_permutation(pattern), std::move(mesh)),
                                 {{column_and_rank, target}}, {{column_and_rank, target}}, std::move(name));
}

void require_positive(int i)
{
    if (i < 1)
        throw invalid_input("catalog parameter i must be positive");
}

} // namespace

std::vector<CalibratedMeshPattern> prism_catalog(int i)
{
    require_positive(i);
    // Size-4 patterns share the central cross through column 2 and rank 2.
    const std::set<Cell> cross = unite({row_band(2, 4), column_band(2, 4)});
    const std::set<Cell> lower_right = block(3, 4, 0, 2);
    const std::set<Cell> upper_left = block(0, 2, 3, 4);
    return {
        pinned("21", unite({row_band(1, 2), {{2, 0}}}), 2, i + 1, "P1"),
        pinned("21", unite({column_band(1, 2), {{0, 2}}}), 2, i + 1, "P2"),
        pinned("21", unite({row_band(1, 2), {{0, 2}}}), 1, i, "P3"),
        pinned("21", unite({column_band(1, 2), {{2, 0}}}), 1, i, "P4"),
        pinned("4123", unite({cross, lower_right}), 2, i, "P5"),
        pinned("2341", unite({cross, upper_left}), 2, i, "P6"),
        pinned("3142", unite({cross, lower_right, upper_left}), 2, i, "P7"),
        pinned("2413", unite({cross, lower_right, upper_left}), 2, i, "P8"),
    };
}

std::vector<CalibratedMeshPattern> proposition_catalog(int i)
{
    require_positive(i);
    return {
        pinned("21", row_band(1, 2), 2, i + 1, "A1"),
        pinned("21", column_band(1, 2), 2, i + 1, "A2"),
        pinned("21", row_band(1, 2), 1, i, "A3"),
        pinned("21", column_band(1, 2), 1, i, "A4"),
    };
}

CalibratedMeshPattern catalog_pattern(const std::string& name, int i)
{
    for (auto&& catalog : {prism_catalog(i), proposition_catalog(i)})
        for (const auto& c : catalog)
            if (c.name() == name)
                return c;
    throw invalid_input("unknown catalog pattern '" + name + "' (expected P1..P8 or A1..A4)");
}

bool is_boolean_by_pattern(const Permutation& w)
{
    static const CalibratedMeshPattern p321 = classical(parse_permutation("321"));
    static const CalibratedMeshPattern p3412 = classical(parse_permutation("3412"));
    return !contains(w, p321) && !contains(w, p3412);
}

} // namespace prism
