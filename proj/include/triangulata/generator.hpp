#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "triangulata/coloring.hpp"
#include "triangulata/embedding.hpp"
#include "triangulata/wheelops.hpp"

namespace triangulata {

struct CatalogEntry {
  CanonicalCode code;
  PlaneTriangulation graph;  // canonically relabeled
  std::string degree_sequence;
  std::vector<WheelOpRecord> provenance;  // chain from a smaller catalog entry, empty for seeds
  int parent_order = 0;
  CanonicalCode parent_code;
};

struct Catalog {
  int n = 0;
  std::vector<CatalogEntry> entries;  // sorted by code, codes distinct

  std::size_t size() const { return entries.size(); }
  const CatalogEntry* find(const CanonicalCode& c) const;
};

// Canonically relabeled entry without provenance.
CatalogEntry catalog_entry(const PlaneTriangulation& g);

class DependencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxOrder = 13;

// Catalogs of min-degree-4 triangulations keyed by order; missing orders are
// generated on demand.
class CatalogStore {
 public:
  explicit CatalogStore(int jobs = 1) : jobs_(jobs) {}
  const Catalog& get(int n);
  void put(Catalog c);
  bool has(int n) const { return catalogs_.count(n) > 0; }

 private:
  int jobs_;
  std::map<int, Catalog> catalogs_;
};

// Builds the order-n catalog from the catalogs of orders 6 .. n-2: an
// extend4/extend5 on every state reachable from a catalog graph by extend2 and
// extend3 pre-steps. Orders 6, 7 and 8 are seeded. Throws DependencyError when
// a lower catalog is needed but absent from `lower`.
Catalog generate_delta4(int n, const std::map<int, const Catalog*>& lower, int jobs = 1);
Catalog generate_delta4(int n, int jobs = 1);

struct ClosureReport {
  bool ok = true;
  std::vector<CanonicalCode> orphans;           // entries with no parent in any lower catalog
  std::vector<CanonicalCode> missing_children;  // children of n-2 entries absent from the catalog
};
// Parents are looked up in `lower`; children of the n-2 catalog must be present.
ClosureReport verify_closure(const Catalog& c, const std::map<int, const Catalog*>& lower);

struct Related {
  PlaneTriangulation graph;
  CanonicalCode code;
  WheelOpRecord via;  // first operation found producing it
  std::vector<WheelOpRecord> chain;
};

std::vector<Related> parents(const PlaneTriangulation& g);
// Min-degree-4 children of orders n+2 .. n+2+max_presteps: one extend4 or
// extend5, preceded by up to max_presteps extend2/extend3 steps. Sorted by
// order, then code.
std::vector<Related> children(const PlaneTriangulation& g, int max_presteps = 2);

Catalog generate_recursive(int n);
bool is_recursive(const PlaneTriangulation& g);

Catalog generate_22fwf(int n);
bool is_22fwf(const PlaneTriangulation& g);
enum class FwfType { Adjacent, Nonadjacent };
std::string to_string(FwfType t);
FwfType classify_22fwf(const PlaneTriangulation& g);

// Vertices are numbered 0..n-1 in sequence order; vertex 3 is the center.
PlaneTriangulation color_sequence_decode(std::string_view s);
std::vector<std::string> all_color_sequences(int n);
// Lexicographically least sequence decoding to a graph isomorphic to g.
std::string color_sequence_encode(const PlaneTriangulation& g);

struct StarExtension {
  PlaneTriangulation graph;
  ColorPartition natural;
};
// extend4 on x-u-y; the new u' keeps the color of u and v gets the fourth color
// under the unique coloring of g.
StarExtension star_extend(const PlaneTriangulation& g, const Path2& p);

// Degree-3 vertex pair of a (2,2)-FWF graph and a common neighbor of largest degree.
Path2 fwf_center_path(const PlaneTriangulation& g);

}  // namespace triangulata
