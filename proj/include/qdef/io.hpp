#pragma once

// Flat-file formats. Parsers report problems as ParseError("file:line: ...").
//
// Presentation:
//   field Q
//   objects e g
//   tensor
//   e g
//   g e
//   alpha g g g -> -1      (absent tuples default to 1; rho/lambda likewise)
//   braided                (trivial braiding; implied by any sigma line)
//   sigma g g -> -1
//
// Functor (between two presentations; omitted lines default to identity):
//   map g -> g
//   coherence g g -> 2
//   unit -> 1
//
// Cochain:   "degree n" then "a b -> v" lines.
// Deformation: "order n", optional "proper", then "term k" blocks of
// "a b -> v" lines (degree 2).
// Tortile data: "field", "order", "dim" lines, then each of c_plus, theta,
// ev_r, coev_r, ev_l, coev_l on its own line followed by a matrix literal.

#include <string>
#include <string_view>

#include "qdef/defcomplex.hpp"
#include "qdef/skeletal.hpp"
#include "qdef/tortile.hpp"

namespace qdef {

std::string read_file(const std::string& path);  // ParseError when unreadable

SkeletalPresentation parse_presentation(std::string_view text, const std::string& source = "<presentation>");
std::string format_presentation(const SkeletalPresentation& p);

FunctorPresentation parse_functor(std::string_view text, std::shared_ptr<const SkeletalPresentation> src,
                                  std::shared_ptr<const SkeletalPresentation> dst,
                                  const std::string& source = "<functor>");
std::string format_functor(const FunctorPresentation& f);

Cochain parse_cochain(std::string_view text, FunctorPtr f, const std::string& source = "<cochain>");
std::string format_cochain(const Cochain& c);

DeformationSeries parse_deformation(std::string_view text, FunctorPtr f, const std::string& source = "<deformation>");
std::string format_deformation(const DeformationSeries& d);

TortileObjectData parse_data(std::string_view text, const std::string& source = "<data>");
std::string format_data(const TortileObjectData& t);

}  // namespace qdef
