#ifndef BERNID_CACHE_FILE_HPP
#define BERNID_CACHE_FILE_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bernid/arith.hpp"
#include "bernid/special.hpp"

namespace bernid {

// File layout:
//   bernid-bernoulli-cache<TAB>v1
//   0<TAB>1/1
//   1<TAB>-1/2
//   ...
// Indices are contiguous from 0.
inline constexpr std::string_view kCacheMagic = "bernid-bernoulli-cache";
inline constexpr std::string_view kCacheVersion = "v1";

class CacheFileError : public std::runtime_error {
   public:
    /// index is the offending B_n index, or -1 for header/IO problems.
    CacheFileError(const std::string& what, long index) : std::runtime_error(what), index_(index) {}
    long index() const { return index_; }

   private:
    long index_;
};

void write_bernoulli_cache(std::ostream& os, std::span<const Rat> values);

/// Parses and revalidates every entry against the recurrence.
std::vector<Rat> read_bernoulli_cache(std::istream& is);

void save_bernoulli_cache(const std::filesystem::path& path, const BernoulliCache& cache);
/// Seeds `cache` from the file; returns the number of entries loaded.
std::size_t load_bernoulli_cache(const std::filesystem::path& path, BernoulliCache& cache);

}  // namespace bernid

#endif  // BERNID_CACHE_FILE_HPP
