// ============================================================================
// bespaced/io.hpp — .stinv text format
// ============================================================================
//
// An invariant is written as a JSON tree of objects.  Every object carries an
// "op" naming its constructor, followed by the constructor's fields:
//
//   {"op":"IMPLIES","premise":{"op":"TimePoint","timepoint":1},
//    "conclusion":{"op":"OccupyBox","x1":1,"y1":1,"x2":10,"y2":10}}
//
//   TRUE, FALSE              (no fields)
//   NOT                      t
//   AND, OR                  t1, t2
//   IMPLIES                  premise, conclusion
//   BIGAND, BIGOR            args (array, may be empty)
//   TimePoint                timepoint
//   TimeInterval             timepoint1, timepoint2
//   Owner / Event            owner / event
//   ComponentState           state
//   Prob                     p (number in [0,1])
//   OccupyPoint              x, y
//   OccupyBox                x1, y1, x2, y2
//   OwnPoint                 owningcomponent, x, y
//   OwnBox                   owningcomponent, x1, y1, x2, y2
//   Occupy3DPoint            x, y, z
//   Occupy3DBox              x1, y1, z1, x2, y2, z2
//   OccupyCircle             x1, y1, radius
//   OccupyNode               node
//   Edge                     source, target
//   Transition               source, event, target
//
// Keys are written in the order above.  Compact output has no whitespace and
// is byte-deterministic, so the compact text of a normalized invariant serves
// as its fingerprint.  A file may hold a bare invariant or a document
// {"version":"1","root":<invariant>}.  Files use the .stinv extension, UTF-8.
// ============================================================================

#ifndef BESPACED_IO_HPP
#define BESPACED_IO_HPP

#include <string>
#include <string_view>

#include "bespaced/invariant.hpp"

namespace bespaced {

enum class Layout { Compact, Pretty };

inline constexpr std::string_view kFormatVersion = "1";

struct ModelDocument {
  std::string version{kFormatVersion};
  Invariant root;
};

std::string serialize(const Invariant& inv, Layout layout = Layout::Compact);
std::string serialize_document(const ModelDocument& doc, Layout layout = Layout::Compact);

/// Throws ParseError (with line/column) on malformed text, SchemaError on an
/// unknown op or a missing, extra or mistyped field, and RangeError on a
/// TimeInterval with t1 > t2 or a Prob outside [0,1].  Box corners are
/// reordered on load.
Invariant parse(std::string_view text);

/// Like parse, but keeps the document wrapper.  A bare invariant is accepted
/// and reported as version "1".
ModelDocument parse_document(std::string_view text);

}  // namespace bespaced

#endif  // BESPACED_IO_HPP
