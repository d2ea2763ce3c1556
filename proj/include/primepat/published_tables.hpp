#pragma once

// Values as printed in the source tables, digit for digit (typos included);
// the verification suite checks them against direct computation.

#include <array>
#include <vector>

#include "primepat/arith.hpp"

namespace primepat::published {

/// Full-gap distances of the ten printed septets starting at 7.
inline const std::vector<Nat> kSeptetDistances = {150,   2760,  3450,  9150,   14190,
                                                  21240, 63600, 76710, 117420, 134250};

/// Second member of each printed septet (distance + 7).
inline const std::vector<Nat> kSeptetSecondMembers = {157,   2767,  3457,  9157,   14197,
                                                      21247, 63607, 76717, 117427, 134257};

/// k with 5, 5+6k, ..., 5+24k all prime, as listed (6k <= 600).
inline const std::vector<Nat> kQuintetK = {1, 2, 7, 8, 16, 21, 42, 71, 79, 99};

inline constexpr Nat kFirst11PletDistance = 1536160080;

using ElevenPlet = std::array<Nat, 11>;

inline const std::vector<ElevenPlet> kElevenPlets = {
    {11, 1536160091, 3072320171, 4608480251, 6144640331, 7680800411, 9216960491, 10753120571,
     12289280651, 13825440731, 15361600811},
    {11, 4911773591, 9823547171, 14735320751, 19647094331, 24558867911, 29470641491, 34382415071,
     39294188651, 44205962231, 49117735811},
    {11, 25104552911, 50209105811, 75313658711, 100418211611, 125522764511, 150627317411,
     175731870311, 200836423211, 225940076111, 251045529011},
    {11, 75275138671, 150550279331, 225825418991, 301100558651, 376375698311, 451650837971,
     526925977631, 602201117291, 677476256951, 752751396611},
    {11, 83516678501, 167033356991, 250550035481, 334066713971, 417583392461, 501100070951,
     584616749441, 668133427931, 751650106421, 835166784911},
    {11, 100070721671, 200141443331, 300212164991, 400282886651, 500353608311, 600424329971,
     700495051631, 800565773291, 900636494951, 1000707216611},
    {11, 150365447411, 300730894811, 451096342211, 601461789611, 751827237011, 902192684411,
     10525581131811, 1202923579211, 1353289026611, 1503654474011},
};

inline constexpr Nat k13TupleDistance = 9918821194590;

inline const std::array<Nat, 13> k13Tuple = {
    13,             9918821194603,   19837642389193,  29756463583783,  39675284778373,
    49594105972963, 59512927167553,  69431748362143,  79350569556733,  89269390751323,
    99188211945913, 109107033140503, 119025854335093};

/// Quintets through 3 and their reversals.
inline const std::vector<std::array<Int, 5>> kQuintetsAt3 = {
    {-7, -5, 3, 11, 13}, {-13, -5, 3, 11, 19}, {-17, -7, 3, 13, 23}, {-37, -17, 3, 23, 43}};
inline const std::vector<std::array<Int, 5>> kQuintetsAt3Reversed = {
    {-13, -11, -3, 5, 7}, {-19, -11, -3, 5, 13}, {-23, -13, -3, 7, 17}, {-43, -23, -3, 17, 37}};

inline const std::array<Int, 9> kNonet = {-43, -31, -19, -7, 5, 17, 29, 41, 53};
inline const std::array<Int, 10> kDecuplet = {-157, -127, -97, -67, -37, -7, 23, 53, 83, 113};

/// Starts of the equal-distance-8 quartets with a power of 3.
inline const std::vector<Nat> kPowerQuartetStarts = {73, 6553};

}  // namespace primepat::published
