#include "bernid/cache_file.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace bernid {

void write_bernoulli_cache(std::ostream& os, std::span<const Rat> values) {
    os << kCacheMagic << '\t' << kCacheVersion << '\n';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << i << '\t' << values[i].numerator().get_str() << '/' << values[i].denominator().get_str() << '\n';
}

std::vector<Rat> read_bernoulli_cache(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw CacheFileError("cache file is empty", -1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos || std::string_view(line).substr(0, tab) != kCacheMagic)
        throw CacheFileError("not a Bernoulli cache file (bad header)", -1);
    if (std::string_view(line).substr(tab + 1) != kCacheVersion)
        throw CacheFileError("unsupported cache format version '" + line.substr(tab + 1) + "'", -1);

    std::vector<Rat> values;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const long expected = static_cast<long>(values.size());
        tab = line.find('\t');
        if (tab == std::string::npos)
            throw CacheFileError("malformed cache line for index " + std::to_string(expected), expected);
        long index = -1;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + tab, index);
        if (ec != std::errc() || ptr != line.data() + tab)
            throw CacheFileError("malformed index near entry " + std::to_string(expected), expected);
        if (index != expected)
            throw CacheFileError("cache entries must be contiguous; expected index " + std::to_string(expected) +
                                     ", found " + std::to_string(index),
                                 expected);
        try {
            values.push_back(Rat::parse(std::string_view(line).substr(tab + 1)));
        } catch (const std::invalid_argument& e) {
            throw CacheFileError("bad value for index " + std::to_string(index) + ": " + e.what(), index);
        }
    }
    if (long bad = BernoulliCache::first_invalid(values); bad >= 0)
        throw CacheFileError("cache entry " + std::to_string(bad) + " fails the Bernoulli recurrence", bad);
    return values;
}

void save_bernoulli_cache(const std::filesystem::path& path, const BernoulliCache& cache) {
    std::ofstream os(path);
    if (!os) throw CacheFileError("cannot open '" + path.string() + "' for writing", -1);
    auto values = cache.snapshot();
    write_bernoulli_cache(os, values);
    if (!os) throw CacheFileError("write to '" + path.string() + "' failed", -1);
}

std::size_t load_bernoulli_cache(const std::filesystem::path& path, BernoulliCache& cache) {
    std::ifstream is(path);
    if (!is) throw CacheFileError("cannot open '" + path.string() + "' for reading", -1);
    auto values = read_bernoulli_cache(is);
    try {
        cache.seed(values);
    } catch (const std::invalid_argument& e) {
        throw CacheFileError(e.what(), -1);
    }
    return values.size();
}

}  // namespace bernid
