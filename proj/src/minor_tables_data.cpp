#include "critid/minor_tables.hpp"

namespace critid {

// One line per table row, in source order: "guard : pattern ; pattern ; ...".
// Rows that repeat a pattern under a different guard are kept as printed;
// instantiation into a set makes the overlap harmless.

namespace {

const std::string kmn_minors = R"(
n>=3 : y_j1 ; y_j1*y_j2 ; y_j1*y_j2*y_j3
m>=3 : x_i1 ; x_i1*x_i2 ; x_i1*x_i2*x_i3
n>=2 : y_j1*y_j2*x_i1 - y_j1 - y_j2
m>=2 : x_i1*x_i2*y_j1 - x_i1 - x_i2
m>=2 & n>=2 : x_i1 + x_i2 ; y_j1 + y_j2 ; x_i1*y_j1
)";

const std::string kmno_minors = R"(
m>=3 : x_i1 ; x_i1*x_i2 ; x_i1*x_i2*x_i3
m>=2 & n>=2 & o>=2 : 2
n>=3 : y_j1 ; y_j1*y_j2 ; y_j1*y_j2*y_j3
true : -2 - x_i1 - y_j1 - z_k1 + x_i1*y_j1*z_k1
o>=3 : z_k1 ; z_k1*z_k2 ; z_k1*z_k2*z_k3
m>=2 & n>=2 : x_i1 ; y_j1 ; x_i1 + 2 ; y_j1 + 2 ; x_i1 + x_i2 ; y_j1 + y_j2 ; x_i1*y_j1
m>=2 & o>=2 : x_i1 ; z_k1 ; x_i1 + 2 ; z_k1 + 2 ; x_i1 + x_i2 ; z_k1 + z_k2 ; x_i1*z_k1
n>=2 & o>=2 : y_j1 ; z_k1 ; y_j1 + 2 ; z_k1 + 2 ; y_j1 + y_j2 ; z_k1 + z_k2 ; y_j1*z_k1
m>=2 : y_j1 + z_k1 + 2 ; x_i1*(y_j1 + 1) ; x_i1*(z_k1 + 1) ; x_i1*x_i2 + x_i1 + x_i2 ; x_i1*x_i2*y_j1 - x_i1 - x_i2 ; x_i1*x_i2*z_k1 - x_i1 - x_i2
n>=2 : x_i1 + z_k1 + 2 ; y_j1*(x_i1 + 1) ; y_j1*(z_k1 + 1) ; y_j1*y_j2 + y_j1 + y_j2 ; y_j1*y_j2*x_i1 - y_j1 - y_j2 ; y_j1*y_j2*z_k1 - y_j1 - y_j2
o>=2 : x_i1 + y_j1 + 2 ; z_k1*(x_i1 + 1) ; z_k1*(y_j1 + 1) ; z_k1*z_k2 + z_k1 + z_k2 ; z_k1*z_k2*x_i1 - z_k1 - z_k2 ; z_k1*z_k2*y_j1 - z_k1 - z_k2
)";

const std::string jmn_minors = R"(
n>=3 : y_j1 ; y_j1*y_j2 ; y_j1*y_j2*y_j3
m>=3 : (x_i1 + 1)*(x_i2 + 1) ; (x_i1 + 1)*(y_j1 + 1) ; x_i1*x_i2*x_i3 - x_i1 - x_i2 - x_i3 - 2
n>=2 : x_i1*y_j1*y_j2 - y_j1 - y_j2
m>=2 : x_i1*x_i2*y_j1 - x_i1 - x_i2 - y_j1 - 2
m>=2 & n>=3 : y_j1
m>=3 & n>=2 : x_i1 + 1
m>=2 & n>=2 : x_i1 + x_i2 + 2 ; x_i1 + y_j1 ; x_i1*y_j1*y_j2 ; y_j1*y_j2 + y_j1 + y_j2
)";

const std::string jmno_minors = R"(
m>=3 & (o>=2 | n>=2) : x_i1 + 1
o>=3 & (m>=2 | n>=2) : z_k1 + 1
n>=3 & (m>=2 | o>=2) : y_j1
m>=2 & n>=2 & o>=2 : 2
n>=3 : y_j1 ; y_j1*y_j3 ; y_j1*y_j2*y_j3
true : x_i1*y_j1*z_k1 - x_i1 - z_k1
m>=3 : x_i1 + 1 ; z_k1*(x_i1 + 1) ; (x_i1 + 1)*(x_i2 + 1) ; (x_i1 + 1)*(y_j1 + 1) ; x_i1*x_i2*x_i3 - x_i1 - x_i2 - x_i3 - 2
o>=3 : z_k1 + 1 ; x_i1*(z_k1 + 1) ; (z_k1 + 1)*(z_k2 + 1) ; (z_k1 + 1)*(y_j1 + 1) ; z_k1*z_k2*z_k3 - z_k1 - z_k2 - z_k3 - 2
n>=2 : x_i1 + z_k1 ; y_j1 + y_j2 ; x_i1*y_j1 ; y_j1*z_k1 ; x_i1*y_j1*y_j2 - y_j1 - y_j2 ; y_j1*y_j2*z_k1 - y_j1 - y_j2
m>=2 : x_i1 + 1 ; x_i1*x_i2 - 1 ; y_j1*z_k1 + z_k1 - 1 ; z_k1*(x_i1 + 1) ; x_i1*x_i2*z_k1 - z_k1 ; x_i1*x_i2*y_j1 - x_i1 - x_i2 - y_j1 - 2
o>=2 : z_k1 + 1 ; x_i1*(z_k1*z_k2 - 1) ; z_k1*z_k2 - 1 ; x_i1*y_j1 + x_i1 - 1 ; x_i1*(z_k1 + 1) ; z_k1*z_k2*y_j1 - z_k1 - z_k2 - y_j1 - 2
m>=2 & o>=2 : x_i1 + 1 ; y_j1 + 2 ; z_k1 + 1 ; x_i1*x_i2 - 1 ; z_k1*z_k2 - 1
m>=2 & n>=2 : x_i1 + 1 ; y_j1 ; z_k1 - 1 ; x_i1 + y_j1 ; x_i1 + x_i2 + 2 ; y_j1*(x_i1 + 1) ; y_j1*y_j2 + y_j1 + y_j2
n>=2 & o>=2 : x_i1 - 1 ; y_j1 ; z_k1 + 1 ; z_k1 + y_j1 ; z_k1 + z_k2 + 2 ; y_j1*(z_k1 + 1) ; y_j1*y_j2 + y_j1 + y_j2
)";

const std::string kmno_presentation = R"(
m>=2 & n>=2 & o>=2 : 2 ; all x: x_# ; all y: y_# ; all z: z_#
m>=2 & n>=2 & o==1 : all x: x_# ; all y: y_# ; z_1 + 2
m>=3 & n==1 & o==1 : all x: x_# ; y_1 + z_1 + 2
m==2 & n==1 & o==1 : x_1*x_2 + x_1 + x_2 ; x_1*z_1 + x_1 ; x_2*z_1 + x_2 ; y_1 + z_1 + 2
m>=3 & n>=3 & o==0 : all x: x_# ; all y: y_#
m>=3 & n==2 & o==0 : all x: x_# ; y_1 + y_2
m==2 & n==2 & o==0 : x_2*y_2 ; x_1 + x_2 ; y_1 + y_2
m>=3 & n==1 & o==0 : all x: x_#
)";

// The corrected editions repair three slips the computed minors expose (the
// tripartite proof's first case derives det = ABC-A-B-C-2 with A = 0 forced
// by m >= 2, B = 0 by n >= 2, C = 0 by o >= 2, so two vanished diagonal
// entries leave the third block's v+2, not the firing pair's):
//   * Kmno pair rows list the wrong blocks' v+2; the sibling block carries it.
//   * KmJoinTn at m,n >= 2 lists x+y (adjacent, never a 3-minor) and a bare
//     x*y*y; the actual extra minor is x*y + y.
//   * TnJoinKmKo lists the adjacent sums x+y (at m,n >= 2) and y+z
//     (at n,o >= 2); neither occurs.

const std::string kmno_minors_corrected = R"(
m>=3 : x_i1 ; x_i1*x_i2 ; x_i1*x_i2*x_i3
m>=2 & n>=2 & o>=2 : 2
n>=3 : y_j1 ; y_j1*y_j2 ; y_j1*y_j2*y_j3
true : -2 - x_i1 - y_j1 - z_k1 + x_i1*y_j1*z_k1
o>=3 : z_k1 ; z_k1*z_k2 ; z_k1*z_k2*z_k3
m>=2 & n>=2 : x_i1 ; y_j1 ; z_k1 + 2 ; x_i1 + x_i2 ; y_j1 + y_j2 ; x_i1*y_j1
m>=2 & o>=2 : x_i1 ; z_k1 ; y_j1 + 2 ; x_i1 + x_i2 ; z_k1 + z_k2 ; x_i1*z_k1
n>=2 & o>=2 : y_j1 ; z_k1 ; x_i1 + 2 ; y_j1 + y_j2 ; z_k1 + z_k2 ; y_j1*z_k1
m>=2 : y_j1 + z_k1 + 2 ; x_i1*(y_j1 + 1) ; x_i1*(z_k1 + 1) ; x_i1*x_i2 + x_i1 + x_i2 ; x_i1*x_i2*y_j1 - x_i1 - x_i2 ; x_i1*x_i2*z_k1 - x_i1 - x_i2
n>=2 : x_i1 + z_k1 + 2 ; y_j1*(x_i1 + 1) ; y_j1*(z_k1 + 1) ; y_j1*y_j2 + y_j1 + y_j2 ; y_j1*y_j2*x_i1 - y_j1 - y_j2 ; y_j1*y_j2*z_k1 - y_j1 - y_j2
o>=2 : x_i1 + y_j1 + 2 ; z_k1*(x_i1 + 1) ; z_k1*(y_j1 + 1) ; z_k1*z_k2 + z_k1 + z_k2 ; z_k1*z_k2*x_i1 - z_k1 - z_k2 ; z_k1*z_k2*y_j1 - z_k1 - z_k2
)";

const std::string jmn_minors_corrected = R"(
n>=3 : y_j1 ; y_j1*y_j2 ; y_j1*y_j2*y_j3
m>=3 : (x_i1 + 1)*(x_i2 + 1) ; (x_i1 + 1)*(y_j1 + 1) ; x_i1*x_i2*x_i3 - x_i1 - x_i2 - x_i3 - 2
n>=2 : x_i1*y_j1*y_j2 - y_j1 - y_j2
m>=2 : x_i1*x_i2*y_j1 - x_i1 - x_i2 - y_j1 - 2
m>=2 & n>=3 : y_j1
m>=3 & n>=2 : x_i1 + 1
m>=2 & n>=2 : x_i1 + x_i2 + 2 ; x_i1*y_j1 + y_j1 ; y_j1*y_j2 + y_j1 + y_j2
)";

const std::string jmno_minors_corrected = R"(
m>=3 & (o>=2 | n>=2) : x_i1 + 1
o>=3 & (m>=2 | n>=2) : z_k1 + 1
n>=3 & (m>=2 | o>=2) : y_j1
m>=2 & n>=2 & o>=2 : 2
n>=3 : y_j1 ; y_j1*y_j3 ; y_j1*y_j2*y_j3
true : x_i1*y_j1*z_k1 - x_i1 - z_k1
m>=3 : x_i1 + 1 ; z_k1*(x_i1 + 1) ; (x_i1 + 1)*(x_i2 + 1) ; (x_i1 + 1)*(y_j1 + 1) ; x_i1*x_i2*x_i3 - x_i1 - x_i2 - x_i3 - 2
o>=3 : z_k1 + 1 ; x_i1*(z_k1 + 1) ; (z_k1 + 1)*(z_k2 + 1) ; (z_k1 + 1)*(y_j1 + 1) ; z_k1*z_k2*z_k3 - z_k1 - z_k2 - z_k3 - 2
n>=2 : x_i1 + z_k1 ; y_j1 + y_j2 ; x_i1*y_j1 ; y_j1*z_k1 ; x_i1*y_j1*y_j2 - y_j1 - y_j2 ; y_j1*y_j2*z_k1 - y_j1 - y_j2
m>=2 : x_i1 + 1 ; x_i1*x_i2 - 1 ; y_j1*z_k1 + z_k1 - 1 ; z_k1*(x_i1 + 1) ; x_i1*x_i2*z_k1 - z_k1 ; x_i1*x_i2*y_j1 - x_i1 - x_i2 - y_j1 - 2
o>=2 : z_k1 + 1 ; x_i1*(z_k1*z_k2 - 1) ; z_k1*z_k2 - 1 ; x_i1*y_j1 + x_i1 - 1 ; x_i1*(z_k1 + 1) ; z_k1*z_k2*y_j1 - z_k1 - z_k2 - y_j1 - 2
m>=2 & o>=2 : x_i1 + 1 ; y_j1 + 2 ; z_k1 + 1 ; x_i1*x_i2 - 1 ; z_k1*z_k2 - 1
m>=2 & n>=2 : x_i1 + 1 ; y_j1 ; z_k1 - 1 ; x_i1 + x_i2 + 2 ; y_j1*(x_i1 + 1) ; y_j1*y_j2 + y_j1 + y_j2
n>=2 & o>=2 : x_i1 - 1 ; y_j1 ; z_k1 + 1 ; z_k1 + z_k2 + 2 ; y_j1*(z_k1 + 1) ; y_j1*y_j2 + y_j1 + y_j2
)";

const std::string tjoin_presentation = R"(
m>=2 & n>=2 & o>=2 : 2 ; all x: x_# + 1 ; all y: y_# ; all z: z_# + 1
m>=2 & n==1 & o>=2 : all x: x_# + 1 ; y_1 + 2 ; all z: z_# + 1
m>=2 & n>=2 & o==1 : all x: x_# + 1 ; all y: y_# ; z_1 - 1
m==1 & n>=3 & o==1 : x_1 + z_1 ; all y: y_#
m==1 & n==2 & o==1 : x_1 + z_1 ; y_1 + y_2 ; y_2*z_1
m>=2 & n==1 & o==1 : all x: x_# + 1 ; z_1*y_1 + z_1 - 1
m>=3 & n>=3 & o==0 : all x: x_# + 1 ; all y: y_#
m==2 & n>=3 & o==0 : x_1 + x_2 + 2 ; all y: y_#
m>=3 & n==2 & o==0 : all x: x_# + 1 ; y_1*y_2 + y_1 + y_2
m==2 & n==2 & o==0 : x_1 + x_2 + 2 ; x_2*y_1 + y_1 ; x_2*y_2 + y_2 ; y_1*y_2 + y_1 + y_2
)";

}  // namespace

const std::string& minor_table_source(TableFamily f, TableEdition ed) {
  const bool fix = ed == TableEdition::corrected;
  switch (f) {
    case TableFamily::Kmn: return kmn_minors;
    case TableFamily::Kmno: return fix ? kmno_minors_corrected : kmno_minors;
    case TableFamily::KmJoinTn: return fix ? jmn_minors_corrected : jmn_minors;
    case TableFamily::TnJoinKmKo: return fix ? jmno_minors_corrected : jmno_minors;
  }
  throw std::invalid_argument("unknown table family");
}

const std::string& presentation_source(TableFamily f) {
  switch (f) {
    case TableFamily::Kmno: return kmno_presentation;
    case TableFamily::TnJoinKmKo: return tjoin_presentation;
    default: throw std::invalid_argument("no third-ideal presentation for this family");
  }
}

}  // namespace critid
