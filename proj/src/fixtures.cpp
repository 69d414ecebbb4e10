#include "hyperdet/fixtures.hpp"

#include <vector>

namespace hyperdet::fixtures {

const std::array<std::string_view, 80> kDegree6Basis = {
    "200010010002", "200001100002", "200001010011", "200000110101", "200000021001",
    "200000020110", "110010100002", "110010010011", "110001100011", "110001010020",
    "110000200101", "110000111001", "110000110110", "110000021010", "101011000002",
    "101010010101", "101002000011", "101001100101", "101001011001", "101001010110",
    "101000110200", "101000021100", "100120000002", "100111000011", "100110100101",
    "100110011001", "100110010110", "100102000020", "100101101001", "100101100110",
    "100101011010", "100100200200", "100100111100", "100100022000", "020010100011",
    "020010010020", "020001100020", "020000201001", "020000200110", "020000111010",
    "011020000002", "011011000011", "011010100101", "011010011001", "011010010110",
    "011002000020", "011001101001", "011001100110", "011001011010", "011000200200",
    "011000111100", "011000022000", "010120000011", "010111000020", "010110101001",
    "010110100110", "010110011010", "010101101010", "010100201100", "010100112000",
    "002011000101", "002010010200", "002002001001", "002002000110", "002001100200",
    "002001011100", "001120000101", "001111001001", "001111000110", "001110100200",
    "001110011100", "001102001010", "001101101100", "001101012000", "000220001001",
    "000220000110", "000211001010", "000210101100", "000210012000", "000201102000",
};

const std::array<int, 80> kInvariantCoefficients = {
     0,  1, -1, -1,  0,  1, -1,  1, -1,  1,  1,  1, -1, -1, -1,  1,  1, -1,  1, -1,
     1, -1,  0,  1,  1,  0, -2, -1, -2,  2,  1, -1,  1,  0,  1, -1,  0, -1,  0,  1,
     1, -1, -1, -2,  2,  0,  2,  0, -1,  0, -1,  1, -1,  1,  1, -1,  1, -1,  1, -1,
     1, -1, -1,  0,  0,  1, -1,  1, -1,  1,  1,  1, -1, -1,  0,  1, -1, -1,  0,  1,
};

const std::array<std::string_view, 5> kOrbitSeeds = {
    "200001100002",  // x111^2 x122 x212 x223^2
    "200001010011",  // x111^2 x122 x222 x213 x223
    "110010010011",  // x111 x121 x112 x222 x213 x223
    "101010010101",  // x111 x211 x112 x222 x123 x223
    "100110010110",  // x111 x221 x112 x222 x123 x213
};

// 1/2, -1, 1/2, 1/2, -1/2
const std::array<int, 5> kOrbitHalfMultipliers = {1, -2, 1, 1, -1};

const std::array<DimensionRow, 17> kDimensionTable = {{
    { 0,         1,         0,         0},
    { 6,        80,        63,        60},
    {12,      1323,      1206,      1180},
    {18,      9832,      9354,      9240},
    {24,     46733,     45294,     44940},
    {30,    167184,    163629,    162740},
    {36,    491383,    483732,    481800},
    {42,   1250576,   1235700,   1231920},
    {48,   2851065,   2824308,   2817480},
    {54,   5959216,   5913963,   5902380},
    {60,  11610467,  11537658,  11518980},
    {66,  21345336,  21232926,  21204040},
    {72,  37375429,  37207794,  37164660},
    {78,  62782448,  62539737,  62477220},
    {84, 101753199, 101410632, 101322320},
    {90, 159853600, 159380712, 159258720},
    {96, 244344689, 243704520, 243539280},
}};

IntPolynomial reference_invariant() {
  const Shape shape{2, 2, 3};
  std::vector<Term> terms;
  for (std::size_t i = 0; i < kDegree6Basis.size(); ++i)
    if (kInvariantCoefficients[i] != 0)
      terms.push_back({ExponentVector::from_digits(shape, kDegree6Basis[i]), kInvariantCoefficients[i]});
  return IntPolynomial(shape, std::move(terms));
}

}  // namespace hyperdet::fixtures
