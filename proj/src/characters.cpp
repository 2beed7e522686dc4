#include "hurwitz/characters.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>

namespace hurwitz {

namespace {

constexpr const char* header_tag = "# hurwitz-chi-cache";

void check_same_size(const Partition& a, const Partition& b, const char* what)
{
    if (a.size() != b.size()) {
        throw DomainError(std::string(what) + ": size mismatch (" + format(a) + " has size " +
                          std::to_string(a.size()) + ", " + format(b) + " has size " +
                          std::to_string(b.size()) + ")");
    }
}

std::string header_line(int ceiling)
{
    return std::string(header_tag) + "\tv" + std::to_string(CharCache::format_version) +
           "\tceiling=" + std::to_string(ceiling);
}

}  // namespace

std::size_t CharCache::KeyHash::operator()(const Key& k) const noexcept
{
    PartitionHash h;
    return h(k.lambda) * 31 + h(k.mu);
}

CharCache::CharCache(int ceiling) : ceiling_(ceiling) {}

CharCache::~CharCache()
{
    try {
        flush();
    } catch (...) {
    }
}

std::unique_ptr<CharCache> CharCache::open(const std::filesystem::path& file, int ceiling)
{
    auto cache = std::make_unique<CharCache>(ceiling);
    cache->file_ = file;
    if (std::filesystem::exists(file))
        cache->load_file();
    else
        cache->write_header();
    return cache;
}

void CharCache::write_header() const
{
    if (file_->has_parent_path())
        std::filesystem::create_directories(file_->parent_path());
    std::ofstream out(*file_, std::ios::trunc);
    if (!out)
        throw Error("cannot write cache file " + file_->string());
    out << header_line(ceiling_) << '\n';
}

namespace {

struct Record {
    Partition lambda;
    Partition mu;
    Integer value;
};

std::optional<Record> parse_record(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos)
            break;
        start = tab + 1;
    }
    if (fields.size() != 4)
        return std::nullopt;
    try {
        int d = std::stoi(fields[0]);
        Record r{parse_partition(fields[1]), parse_partition(fields[2]), 0};
        if (fields[3].empty() || r.value.set_str(fields[3], 10) != 0)
            return std::nullopt;
        if (r.lambda.size() != d || r.mu.size() != d)
            return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

void CharCache::load_file()
{
    std::ifstream in(*file_, std::ios::binary);
    if (!in)
        throw Error("cannot read cache file " + file_->string());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();

    if (contents.empty()) {
        write_header();
        return;
    }

    std::size_t header_end = contents.find('\n');
    std::istringstream hs(contents.substr(0, header_end));
    std::string tag1, tag2, version;
    hs >> tag1 >> tag2 >> version;
    if (header_end == std::string::npos || tag1 + " " + tag2 != header_tag)
        throw ParseError("cache file " + file_->string() + " has no header");
    if (version != "v" + std::to_string(format_version))
        throw ParseError("cache file " + file_->string() + " has unsupported version " + version);

    std::size_t pos = header_end + 1;
    std::size_t good_end = pos;
    while (pos < contents.size()) {
        std::size_t nl = contents.find('\n', pos);
        // an unterminated last line is an interrupted write
        auto record = nl == std::string::npos ? std::nullopt : parse_record(contents.substr(pos, nl - pos));
        std::size_t next = nl == std::string::npos ? contents.size() : nl + 1;
        if (record) {
            if (truncated_ > 0)
                throw ParseError("cache file " + file_->string() + ": corrupt record followed by valid records");
            values_.insert_or_assign(Key{std::move(record->lambda), std::move(record->mu)},
                                     std::move(record->value));
            good_end = next;
        } else {
            ++truncated_;
        }
        pos = next;
    }
    if (good_end < contents.size())
        std::filesystem::resize_file(*file_, good_end);
}

std::optional<Integer> CharCache::find(const Partition& lambda, const Partition& mu) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.find(Key{lambda, mu});
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

void CharCache::insert(const Partition& lambda, const Partition& mu, const Integer& value)
{
    if (lambda.size() > ceiling_)
        throw DomainError("degree " + std::to_string(lambda.size()) + " exceeds cache ceiling " +
                          std::to_string(ceiling_));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.try_emplace(Key{lambda, mu}, value);
    if (inserted && file_)
        pending_.push_back(it->first);
}

void CharCache::flush()
{
    std::unique_lock lock(mutex_);
    if (!file_ || pending_.empty())
        return;
    std::ofstream out(*file_, std::ios::app);
    if (!out)
        throw Error("cannot append to cache file " + file_->string());
    for (const Key& k : pending_) {
        out << k.lambda.size() << '\t' << format(k.lambda) << '\t' << format(k.mu) << '\t'
            << values_.at(k).get_str() << '\n';
    }
    pending_.clear();
}

void CharCache::clear()
{
    std::unique_lock lock(mutex_);
    values_.clear();
    pending_.clear();
    if (file_)
        write_header();
}

std::size_t CharCache::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

std::map<int, std::size_t> CharCache::degree_histogram() const
{
    std::shared_lock lock(mutex_);
    std::map<int, std::size_t> hist;
    for (const auto& [k, v] : values_)
        ++hist[k.lambda.size()];
    return hist;
}

CharCache& default_cache()
{
    static CharCache cache;
    return cache;
}

namespace {

/// Removes the rim hook that moves bead `from` to `from - k` in the beta-set.
Partition remove_rim_hook(const std::vector<int>& beta, int from, int k)
{
    std::vector<int> next;
    next.reserve(beta.size());
    for (int b : beta)
        next.push_back(b == from ? from - k : b);
    std::sort(next.begin(), next.end(), std::greater<>());
    std::vector<int> parts;
    auto n = static_cast<int>(next.size());
    for (int i = 0; i < n; ++i) {
        int part = next[static_cast<std::size_t>(i)] - (n - 1 - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Integer mn_evaluate(const Partition& lambda, const Partition& mu, CharCache& cache)
{
    if (mu.empty())
        return 1;
    if (auto hit = cache.find(lambda, mu))
        return *hit;

    const int k = mu[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    auto n = lambda.length();
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        beta.push_back(lambda[static_cast<std::size_t>(i)] + (n - 1 - i));
    std::set<int> occupied(beta.begin(), beta.end());

    Integer total = 0;
    for (int b : beta) {
        int target = b - k;
        if (target < 0 || occupied.contains(target))
            continue;
        auto between = std::distance(occupied.upper_bound(target), occupied.lower_bound(b));
        Integer value = mn_evaluate(remove_rim_hook(beta, b, k), rest, cache);
        if (between % 2)
            total -= value;
        else
            total += value;
    }
    cache.insert(lambda, mu, total);
    return total;
}

}  // namespace

Integer chi(const Partition& lambda, const Partition& mu, CharCache& cache)
{
    check_same_size(lambda, mu, "chi");
    return mn_evaluate(lambda, mu, cache);
}

Integer central_character(const Partition& mu, const Partition& lambda, CharCache& cache)
{
    check_same_size(mu, lambda, "central_character");
    Integer num = class_size(mu) * chi(lambda, mu, cache);
    Integer den = dimension(lambda);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InternalError("central character f_" + format(mu) + "(" + format(lambda) +
                            ") is not integral: " + num.get_str() + "/" + den.get_str());
    }
    return Integer(num / den);
}

Rational character_ratio(const Partition& lambda, const Partition& mu, CharCache& cache)
{
    check_same_size(lambda, mu, "character_ratio");
    return make_rational(chi(lambda, mu, cache), dimension(lambda));
}

}  // namespace hurwitz
