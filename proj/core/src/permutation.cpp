#include "prism/permutation.hpp"

#include "prism/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace prism {

namespace detail {

std::vector<int> parse_int_list(std::string_view text, std::string_view what)
{
    auto fail = [&](const std::string& why) {
        throw invalid_input("invalid " + std::string(what) + " '" + std::string(text) + "': " + why);
    };
    std::vector<int> out;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                fail("expected digits");
            out.push_back(c - '0');
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            fail("bad entry '" + std::string(tok) + "'");
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

std::string format_int_list(const std::vector<int>& values, bool digits)
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (digits) {
            out.push_back(static_cast<char>('0' + values[k]));
        } else {
            if (k)
                out.push_back(',');
            out += std::to_string(values[k]);
        }
    }
    return out;
}

} // namespace detail

Permutation::Permutation(std::vector<int> one_line)
    : one_line_(std::move(one_line))
{
    const int n = size();
    if (n < 1 || n > max_size)
        throw invalid_input("permutation size must be in [1," + std::to_string(max_size) + "], got " +
                            std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : one_line_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw invalid_input("not a permutation of [1," + std::to_string(n) + "]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1)
        throw invalid_input("identity: size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const
{
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(one_line_.size());
    for (int x = 1; x <= size(); ++x)
        inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
    return Permutation(std::move(inv));
}

Permutation Permutation::swap_positions(int a, int b) const
{
    Permutation out = *this;
    std::swap(out.one_line_[static_cast<std::size_t>(a - 1)], out.one_line_[static_cast<std::size_t>(b - 1)]);
    return out;
}

Permutation Permutation::swap_values(int a, int b) const
{
    Permutation out = *this;
    for (int& v : out.one_line_) {
        if (v == a)
            v = b;
        else if (v == b)
            v = a;
    }
    return out;
}

std::size_t PermutationHash::operator()(const Permutation& w) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int v : w.one_line()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

Permutation compose(const Permutation& u, const Permutation& v)
{
    if (u.size() != v.size())
        throw invalid_input("compose: size mismatch");
    std::vector<int> out(static_cast<std::size_t>(u.size()));
    for (int x = 1; x <= u.size(); ++x)
        out[static_cast<std::size_t>(x - 1)] = u(v(x));
    return Permutation(std::move(out));
}

int inversions(const Permutation& w)
{
    int count = 0;
    const int n = w.size();
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            count += w(x) > w(y) ? 1 : 0;
    return count;
}

IndexSet descents(const Permutation& w)
{
    IndexSet out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1))
            out.push_back(i);
    return out;
}

IndexSet support(const Permutation& w)
{
    // The prefix {w(1..i)} equals {1..i} exactly when its maximum is i.
    IndexSet out;
    int prefix_max = 0;
    for (int i = 1; i < w.size(); ++i) {
        prefix_max = std::max(prefix_max, w(i));
        if (prefix_max != i)
            out.push_back(i);
    }
    return out;
}

std::optional<SupportWitness> support_witness(const Permutation& w, int i)
{
    const int n = w.size();
    if (i < 1 || i > n - 1)
        throw invalid_input("support_witness: index " + std::to_string(i) + " outside [1," +
                            std::to_string(n - 1) + "]");
    for (int x1 = 1; x1 <= i; ++x1) {
        if (w(x1) <= i)
            continue;
        for (int x2 = i + 1; x2 <= n; ++x2)
            if (w(x2) <= i)
                return SupportWitness{{x1, x2}, {w(x1), w(x2)}};
    }
    return std::nullopt;
}

Permutation parse_permutation(std::string_view text)
{
    return Permutation(detail::parse_int_list(text, "permutation"));
}

std::string to_string(const Permutation& w)
{
    return detail::format_int_list(w.one_line(), w.size() <= 9);
}

} // namespace prism
