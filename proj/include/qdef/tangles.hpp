#pragma once

// Framed (singular) tangles presented as Morse words and braid closures.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdef {

// Up is a strand labeled X, Down one labeled X*.
enum class Orient { Up, Down };
using Signature = std::vector<Orient>;

enum class SliceKind { IdUp, IdDown, CupR, CupL, CapR, CapL, CrPos, CrNeg, CrSing, TwPos, TwNeg, TwSing };

const char* slice_name(SliceKind k);
// Throws ParseError on an unknown name.
SliceKind slice_kind_from_name(std::string_view name);
// Local boundary of a slice kind.
const Signature& slice_input(SliceKind k);
const Signature& slice_output(SliceKind k);
bool is_singular(SliceKind k);

struct Slice {
  SliceKind kind;
  std::size_t offset = 0;

  bool operator==(const Slice&) const = default;
};

struct MorseDiagram {
  Signature source;
  Signature target;
  std::vector<Slice> slices;  // bottom to top

  bool is_closed() const { return source.empty() && target.empty(); }
  bool operator==(const MorseDiagram&) const = default;
};

struct Boundary {
  Signature source;
  Signature target;
};

// Throws ValidationError at the first slice whose input does not match the
// running signature (position slices.size() + 1 for a wrong target).
Boundary validate(const MorseDiagram& d);
// Signature below slice i, for i = 0..slices.size(). Assumes d validates.
std::vector<Signature> signatures(const MorseDiagram& d);

// Number of connected components, counting open arcs as well as loops.
std::size_t component_count(const MorseDiagram& d);

struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;                                     // +-i, i = 1..strands-1
  std::vector<int> framings;                                    // one per strand
  std::vector<std::size_t> singular_letters;                    // 1-based letter positions
  std::vector<std::pair<std::size_t, std::size_t>> singular_twists;  // (1-based strand, count)

  // Throws ParseError on out-of-range letters or markers.
  void check() const;
  // Cycle count of the underlying permutation.
  std::size_t permutation_cycles() const;
};

// Closure with nested CupL below and CapR above, the braid acting on the Up
// strands at offsets 0..k-1.
MorseDiagram trace_closure(const BraidWord& b);

// Stacks b above a. Both must be closed (BoundaryError otherwise).
MorseDiagram disjoint_union(const MorseDiagram& a, const MorseDiagram& b);

std::size_t singular_count(const MorseDiagram& d);
// Replaces the slices at the given 0-based indices by their singular
// versions. Throws PreconditionError if an index is out of range or does not
// point at a crossing or twist.
MorseDiagram singularize(const MorseDiagram& d, const std::vector<std::size_t>& positions);
// Indices of the slices that singularize accepts.
std::vector<std::size_t> singularizable_positions(const MorseDiagram& d);

// Text forms. Braids: "strands=k; word=s1 -s2; framings=0,1; singular=1;
// singular_twists=(1,2)". Morse: optional "source"/"target" lines listing U/D
// labels, then one "SLICE offset" per line; '#' starts a comment.
BraidWord parse_braid(std::string_view text, const std::string& source = "<braid>");
MorseDiagram parse_morse(std::string_view text, const std::string& source = "<morse>");
std::string format_braid(const BraidWord& b);
std::string format_morse(const MorseDiagram& d);

}  // namespace qdef
