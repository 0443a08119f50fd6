#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umap/ribbon_map.hpp"

namespace umap {

/// Perfect matching of the sides of a 2n-gon plus one bit per matched pair.
/// Pairs are numbered by their smaller side; bit 1 glues the two sides in the
/// same direction along the boundary, bit 0 in opposite directions.
struct GluingCode {
  std::vector<int> matching;
  std::vector<std::uint8_t> twist_bits;

  int num_edges() const { return static_cast<int>(matching.size()) / 2; }
};

bool is_valid(const GluingCode& code);

/// Half-edge 2p starts side i and 2p+1 ends it, for the p-th pair {i < j}.
/// Corner k of the polygon (between sides k-1 and k) becomes a vertex corner;
/// the vertex holding corner 0 is vertex 0 and the root is the flag leaving
/// along side 0 from corner 0.
RibbonMap decode(const GluingCode& code);

/// Calls `f` on every code with n edges, matchings in lexicographic order of
/// the partner of the smallest unmatched side, bits as a binary counter.
void for_each_code(int n, const std::function<void(const GluingCode&)>& f);

enum class Tristate : std::uint8_t { any, yes, no };

struct CensusFilter {
  bool precubic = false;
  Tristate orientable = Tristate::any;
  std::optional<std::set<int>> twice_h;
  bool root_at_leaf = false;
};

/// Associative summary of a census. Per-map counters are 64-bit: the largest
/// supported census has about 10^10 codes.
struct CountTable {
  int n = 0;
  std::uint64_t codes = 0;
  /// (twice_h, orientable) -> number of maps passing the filter
  std::map<std::pair<int, bool>, std::uint64_t> counts;
  /// Filled only when classification was requested (precubic maps).
  std::uint64_t classified = 0;
  std::map<int, std::uint64_t> tau_histogram;
  std::array<std::uint64_t, 4> flavor_counts{};
  std::uint64_t tau_sum = 0;
  std::uint64_t dominant = 0;
  std::uint64_t with_cycles = 0;
  /// Serialized maps selected by the dump option, in enumeration order.
  std::vector<std::string> witnesses;

  void merge(const CountTable& other);
  std::uint64_t total() const;
  std::uint64_t orientable_total() const;

  /// Rows "twice_h<TAB>orientable<TAB>count", orientable as 1/0.
  std::string to_tsv() const;
  /// One object per row, then one object with the distributions.
  std::string to_ndjson() const;
};

struct EnumerateOptions {
  CensusFilter filter;
  int jobs = 1;
  int edge_cap = 7;
  /// Classify every map passing the filter (needs precubic in the filter).
  bool classify = false;
  /// Also compute core/scheme for maps of positive type.
  bool dominance = false;
  bool dump = false;
};

inline constexpr int kDefaultEdgeCap = 7;
inline constexpr int kMaxEdgeCap = 10;

/// Cap from an explicit flag, else UMAP_MAX_EDGES, else the default.
/// Throws Error(invalid_argument) for unusable values.
int resolve_edge_cap(std::optional<int> flag);

/// Throws Error(size_over_cap) when n exceeds options.edge_cap.
CountTable enumerate(int n, const EnumerateOptions& options);

/// Sequential walk over the maps passing `filter`, in enumeration order.
void for_each_map(int n, const CensusFilter& filter, int edge_cap, const std::function<void(const RibbonMap&)>& f);

/// Edge count of precubic maps counted by η_h(m) or ξ_h(m): 2m + [h integer].
int precubic_edges(int twice_h, int m);

/// Classified census of precubic maps of one type and orientability class.
CountTable precubic_census(HalfType type, int m, int jobs = 1, int edge_cap = kDefaultEdgeCap);

/// Canonically oriented precubic maps of the given class, in enumeration order.
std::vector<RibbonMap> precubic_maps(HalfType type, int m, int edge_cap = kDefaultEdgeCap);

}  // namespace umap
