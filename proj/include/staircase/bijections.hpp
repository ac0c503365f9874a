#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "staircase/binary_string.hpp"
#include "staircase/boundary.hpp"
#include "staircase/path.hpp"

// Explicit correspondences behind the counting identities. Every map here
// is a bijection on its stated domain and each has its inverse alongside,
// so tests can drive round trips in both directions.
namespace staircase::bijections {

// Decomposition pi = rho, fatal North, sigma around the first staircase
// contact. j is the x-residue class (1..s) of the contact.
struct InterchangeSplit {
  std::vector<Step> rho;
  std::vector<Step> sigma;
  Point bad_point{};
  long long j = 0;
};

// std::nullopt when the path avoids the staircase. Throws std::logic_error
// when the path starts on the staircase or first meets it by an east step;
// neither can happen for paths launched below the first horizontal run.
std::optional<InterchangeSplit> split_at_first_boundary_hit(const LatticePath& path,
                                                            const StaircaseA& boundary);

// A path (0,0) -> (sn+1, tn) rewritten as a same-set path (1,i) -> (sn+1, tn+i):
// strip the i leading norths and the first east, append i norths.
struct EmbedResult {
  long long i = 0;
  LatticePath path;
};
EmbedResult embed_s1(const LatticePath& path);

// For pi = rho N sigma first meeting the staircase at class-j point b, the
// interchanged path starts at (j-1, t) (part One) or (j, t+1) (part Two)
// with steps sigma E rho. Lands in the unconstrained family U'_j.
LatticePath interchange(const LatticePath& path, long long s, long long t,
                        long long n, Part part);

// Recovers pi from the interchanged path: sigma is the prefix up to the
// last staircase contact, the next step must be the east separator, and
// the start height i is pinned by first-contact consistency.
LatticePath interchange_inverse(const LatticePath& path, long long s, long long t,
                                long long n, long long j, Part part);

// Bit-pair image of a U'_j path: alpha marks northwest-corner columns
// (one digit deleted), beta marks corner rows plus a first-step flag and
// the deleted digit's complement. weight(beta) = weight(alpha) + 2.
struct AlphaBeta {
  BinaryString alpha;
  BinaryString beta;
};
AlphaBeta encode_alpha_beta(const LatticePath& path, long long s, long long t,
                            long long n, long long j, Part part);
LatticePath decode_alpha_beta(const BinaryString& alpha, const BinaryString& beta,
                              long long s, long long t, long long n, long long j,
                              Part part);

// Cyclic block rotation: of the n rotations of the input's blocks, exactly
// one lands in the avoiding family. shift is 1-based; 1 is the identity.
// Throws std::logic_error if no rotation, or more than one, qualifies.
struct ShiftResult {
  long long shift = 0;
  std::vector<Step> steps;
};
// Universe: sn+1 easts and tn norths ending in a north step; blocks end at
// every t-th north; membership anchors the steps at (0,0).
ShiftResult raney_unique_shift_s1(const std::vector<Step>& steps, long long s,
                                  long long t, long long n);
// Universe: sn-1 easts and tn-1 norths; every t-th north is a fixed
// separator between the n rotated blocks; membership anchors at (1,0).
ShiftResult raney_unique_shift_s2(const std::vector<Step>& steps, long long s,
                                  long long t, long long n);

// Universe: strings of length (s+2)n+1 starting with 0 and changing exactly
// 2n-1 times, i.e. n blocks 0^a 1^b; exactly one block rotation is
// admissible. shift is 1-based; 1 is the identity.
struct BinaryShiftResult {
  long long shift = 0;
  BinaryString bits;
};
BinaryShiftResult raney_unique_shift_binary(const BinaryString& bits, long long n,
                                            long long s);

// A path (1,0) -> (sn, tn-1) with nu >= 1 leading norths becomes the path
// (1,nu) -> (sn, tn+nu-1) with those norths appended instead; its inverse
// strips the trailing norths back to the front.
LatticePath move_norths_to_end(const LatticePath& path, long long s, long long t,
                               long long n);
LatticePath move_norths_to_front(const LatticePath& path, long long s, long long t,
                                 long long n);

// P = a middle b with b the final north run plus trailing easts
// (1 <= |b| <= k+1) and a the longest prefix of east-potential k+1-|b|.
// std::nullopt when the last k+1 steps are all east. Requires the
// east-potential of P (easts - k*norths) to be at least k+1.
struct Trisection {
  std::vector<Step> a;
  std::vector<Step> middle;
  std::vector<Step> b;
};
std::optional<Trisection> trisect(const std::vector<Step>& steps, long long k);

// Repeated trisection of the middle until the extracted prefix has even
// height (EvenHeight, tail = the remaining middle) or trisection fails
// (TrailingEasts, tail = the failing middle, which ends in k+1 easts).
enum class PhiCase { EvenHeight, TrailingEasts };
struct PhiDecomposition {
  std::vector<std::pair<std::vector<Step>, std::vector<Step>>> pairs;  // (a_i, b_i)
  std::vector<Step> tail;
  PhiCase kind = PhiCase::EvenHeight;
};
PhiDecomposition phi_decompose(const LatticePath& path, long long k);

// Length-preserving-plus-one bijection from length-2(k+1)n paths strictly
// right of x = ky onto length-(2(k+1)n+1) paths that avoid the staircase
// from (0,2) with 2k-east runs and touch x = ky+1 above the axis.
// Requires k >= 1.
LatticePath phi(const LatticePath& path, long long k);
LatticePath phi_inverse(const LatticePath& path, long long k);

// Visits to the points (2ik+k+1, 2i+1), i >= 0: where x = ky+1 meets odd y.
// index counts steps consumed, 0 meaning the start point.
struct WaypointVisit {
  long long index = 0;
  Point point{};
};
std::vector<WaypointVisit> waypoints(const LatticePath& path, long long k);

} // namespace staircase::bijections
