#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1)
            throw DomainError("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::cycle_class(int k, int d)
{
    if (k < 1 || k > d)
        throw DomainError("cycle length " + std::to_string(k) + " outside 1.." + std::to_string(d));
    std::vector<int> parts(static_cast<std::size_t>(d - k + 1), 1);
    parts[0] = k;
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int part, int count)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), part));
}

int Partition::multiplicity(int i) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::operator+(const Partition& other) const
{
    std::vector<int> merged = parts_;
    merged.insert(merged.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(merged));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view digits, std::string_view token)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("malformed partition token '" + std::string(token) + "'");
    if (value < 1)
        throw ParseError("nonpositive part in token '" + std::string(token) + "'");
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text)
{
    text = trim(text);
    std::vector<int> parts;
    if (text.empty())
        return Partition();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view token =
            trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        std::size_t caret = token.find('^');
        int part = parse_positive(trim(token.substr(0, caret)), token);
        int count = 1;
        if (caret != std::string_view::npos)
            count = parse_positive(trim(token.substr(caret + 1)), token);
        parts.insert(parts.end(), static_cast<std::size_t>(count), part);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string format(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Integer z(const Partition& mu)
{
    Integer r = 1;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        auto m = static_cast<unsigned>(j - i);
        r *= factorial(m) * ipow(parts[i], m);
        i = j;
    }
    return r;
}

int colength(const Partition& theta) { return theta.size() - theta.length(); }

Partition conjugate(const Partition& lambda)
{
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Integer dimension(const Partition& lambda)
{
    Partition lc = conjugate(lambda);
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            hooks *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (lc[static_cast<std::size_t>(j)] - i - 1) + 1;
    return Integer(factorial(static_cast<unsigned>(lambda.size())) / hooks);
}

Integer class_size(const Partition& mu)
{
    return Integer(factorial(static_cast<unsigned>(mu.size())) / z(mu));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& enumerate_partitions(int d, int ceiling)
{
    if (d < 0)
        throw DomainError("negative degree");
    if (d > ceiling)
        throw DomainError("degree " + std::to_string(d) + " exceeds ceiling " + std::to_string(ceiling));

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> memo;
    std::lock_guard lock(mutex);
    auto& slot = memo[d];
    if (!slot) {
        slot = std::make_unique<std::vector<Partition>>();
        std::vector<int> prefix;
        generate(d, d, prefix, *slot);
    }
    return *slot;
}

std::vector<std::pair<Partition, Partition>> sub_multisets(const Partition& theta, int size)
{
    // (value, multiplicity) groups in descending value order
    std::vector<std::pair<int, int>> groups;
    for (int p : theta.parts()) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1);
    }

    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> taken(groups.size(), 0);
    auto rec = [&](auto&& self, std::size_t g, int left) -> void {
        if (g == groups.size()) {
            if (left != 0)
                return;
            std::vector<int> omega, sigma;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                omega.insert(omega.end(), static_cast<std::size_t>(taken[i]), groups[i].first);
                sigma.insert(sigma.end(), static_cast<std::size_t>(groups[i].second - taken[i]), groups[i].first);
            }
            out.emplace_back(Partition(std::move(omega)), Partition(std::move(sigma)));
            return;
        }
        auto [value, mult] = groups[g];
        for (int t = std::min(mult, left / value); t >= 0; --t) {
            taken[g] = t;
            self(self, g + 1, left - t * value);
        }
        taken[g] = 0;
    };
    if (size >= 0 && size <= theta.size())
        rec(rec, 0, size);
    return out;
}

std::vector<std::pair<Partition, Partition>> splits(const Partition& theta, int d1)
{
    if (d1 < 1 || d1 >= theta.size())
        throw DomainError("split size " + std::to_string(d1) + " outside 1.." + std::to_string(theta.size() - 1));
    return sub_multisets(theta, d1);
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts())
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

}  // namespace hurwitz
