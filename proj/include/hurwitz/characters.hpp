#pragma once

#include "hurwitz/numeric.hpp"
#include "hurwitz/partition.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace hurwitz {

/// Memo of irreducible character values chi_lambda(mu), optionally backed by
/// an append-only text file.
///
/// Record format, one per line, tab-separated:
///     degree  lambda  mu  value
/// with partitions in canonical text and the value in decimal. The first
/// line is a `#` header carrying the format version and degree ceiling.
/// A malformed final record (e.g. from an interrupted write) is dropped and
/// the file truncated before it; a malformed record followed by valid ones is
/// a ParseError.
///
/// Lookups take a shared lock and inserts an exclusive one, so the cache can
/// be shared across sweep threads. Two threads may compute the same value;
/// both insert identical results.
class CharCache {
public:
    static constexpr int format_version = 1;

    explicit CharCache(int ceiling = default_degree_ceiling);
    ~CharCache();

    CharCache(const CharCache&) = delete;
    CharCache& operator=(const CharCache&) = delete;

    /// Loads (or creates) the cache file and appends new records to it on flush().
    static std::unique_ptr<CharCache> open(const std::filesystem::path& file,
                                           int ceiling = default_degree_ceiling);

    std::optional<Integer> find(const Partition& lambda, const Partition& mu) const;
    void insert(const Partition& lambda, const Partition& mu, const Integer& value);

    /// Appends records not yet written to the backing file. No-op without one.
    void flush();

    /// Drops every entry; truncates the backing file to its header.
    void clear();

    std::size_t size() const;
    /// Entry count per degree.
    std::map<int, std::size_t> degree_histogram() const;
    int ceiling() const noexcept { return ceiling_; }
    const std::optional<std::filesystem::path>& file() const noexcept { return file_; }
    /// Records dropped as corrupt when the file was loaded.
    std::size_t truncated_records() const noexcept { return truncated_; }

private:
    struct Key {
        Partition lambda;
        Partition mu;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    void load_file();
    void write_header() const;

    int ceiling_;
    std::optional<std::filesystem::path> file_;
    std::size_t truncated_ = 0;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Integer, KeyHash> values_;
    std::vector<Key> pending_;
};

/// Process-wide in-memory cache used when callers do not manage their own.
CharCache& default_cache();

/// Irreducible character chi_lambda(mu) by the Murnaghan-Nakayama rule.
/// Strips the largest part of mu first and memoizes every intermediate
/// (lambda', mu-suffix) pair.
Integer chi(const Partition& lambda, const Partition& mu, CharCache& cache);

/// f_mu(lambda) = (d!/z_mu) chi_lambda(mu) / dim lambda. Always an integer;
/// throws InternalError if the division is inexact.
Integer central_character(const Partition& mu, const Partition& lambda, CharCache& cache);

/// chi_lambda(mu) / dim lambda, signed.
Rational character_ratio(const Partition& lambda, const Partition& mu, CharCache& cache);

}  // namespace hurwitz
