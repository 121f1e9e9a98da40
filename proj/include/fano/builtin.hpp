#pragma once

// The built-in verification scenarios, written in the scenario language.

#include "fano/dsl.hpp"
#include "fano/scenario.hpp"

#include <string_view>
#include <vector>

namespace fano {

inline constexpr std::string_view kBuiltinSource = R"scn(
scenario "sanity-p4-line" {
  profile P4 h4 1 index 5 ambient ci4 codim 0 chi 1 euler 5
  center curve genus 0 hc 1
  let L = H - E
  assert "E^4" quartic(E, E, E, E) == 3 cite "P^4 line projection: E^4 = -K.C + 2g - 2 = 5 - 2"
  assert "(H-E)^4" quartic(L, L, L, L) == 0 cite "P^4 line projection: the image is a 3-space"
  assert "chi(H-E)" chi(L) == 3 cite "P^4 line projection: hyperplanes through a line, h^0 = 3"
  assert "chi(O)" chi(0) == 1 cite "blowups preserve chi(O)"
  assert "c2 coefficient of A" c2a() == -7 cite "P^4 line projection: c_2 restricted to a fibre plane is 3"
  assert "Eu" euler() == 9 cite "Eu(P^4) + Eu(P^1)"
  assert "Serre duality" chi(L) == chi(-5*H + 2*E - L) cite "chi(D) = chi(K - D)"
}

scenario "gr25-chern" {
  grassmannian 2 5
  assert "c_1(I)" csub(1) == sigma[1] cite "Gr(2,5) universal subbundle: c_1(I) = sigma_{1,0}"
  assert "c_2(I)" csub(2) == sigma[1,1] cite "Gr(2,5) universal subbundle: c_2(I) = sigma_{1,1}"
  assert "c(Q) = 1 + s1 + s2 + s3" [[degree(cquot(1)*sigma[3,2]), degree(cquot(2)*sigma[3,1]), degree(cquot(3)*sigma[3])]] == [[1, 1, 1]] cite "Gr(2,5) universal quotient: c_r(Q) = sigma_{r,0}"
  assert "c_1(G)" chern(1) == 5*sigma[1] cite "Gr(2,5) Chern classes: c_1(G) = 5 sigma_{1,0}"
  assert "c_2(G)" chern(2) == 11*sigma[2] + 12*sigma[1,1] cite "Gr(2,5) Chern classes: c_2(G) = 11 sigma_{2,0} + 12 sigma_{1,1}"
  assert "c_3(G)" chern(3) == 15*sigma[3] + 30*sigma[2,1] cite "Gr(2,5) Chern classes: c_3(G) = 15 sigma_{3,0} + 30 sigma_{2,1}"
  assert "c_4(G)" chern(4) == 35*sigma[3,1] + 25*sigma[2,2] cite "Gr(2,5) Chern classes: c_4(G) = 35 sigma_{3,1} + 25 sigma_{2,2}"
  assert "Eu(G)" degree(chern(6)) == grasseuler(2, 5) cite "integral of c_top = C(5,2)"
  assert "deg Gr(2,5)" degree(sigma[1]^6) == 5 cite "Gr(2,5) degree: sigma_1^6 = 5"
  assert "dim Gr(2,5)" grassdim(2, 5) == 6 cite "dim Gr(2,5) = 2*3"
}

scenario "gr26-v14-plane" {
  profile V14 h4 14 index 2 ambient gr2_6 codim 4 chi 1 euler 12
  assert "c_1(V)" chern(1) == 2*sigma[1] cite "V_14 index 2: c_1(V) = 2 sigma_{1,0}"
  assert "c_2(V)" chern(2) == 2*sigma[2] + 4*sigma[1,1] cite "V_14 Chern classes: c_2(V) = 2 sigma_{2,0} + 4 sigma_{1,1}"
  assert "Eu(V)" seuler() == 12 cite "V_14 Chern classes: Eu(V) = 12"
  assert "H^4 on V" sdegree(sigma[1]^4) == 14 cite "V_14 degree: d = 2g - 2 = 14"
  assert "deg Gr(2,6)" degree(sigma[1]^8) == 14 cite "Gr(2,6) degree: sigma_1^8 = 14"
  assert "genus of V" mukaigenus(sdegree(sigma[1]^4)) == 8 cite "V_14 has genus 8"
  assert "c_4(Q) on Gr(2,6)" cquot(4) == sigma[4] cite "Gr(2,6) universal quotient has rank 4"
  assert "N of the sigma_{4,2}-plane" [[nc1(sigma[4,2]), nc2(sigma[4,2])]] == [[-1, 2]] cite "sigma_{4,2}-plane in V_14: c_1(N) = -l, c_2(N_{Pi/V}) = 2"
}

scenario "moduli-counts" {
  let pointed = grassdim(4, 6) + 3
  let family = grassdim(8, 12) + pointed
  let quadrics = 5 + 7
  assert "dim G" grassdim(8, 12) == 32 cite "V_14 codimension count: G = Gr(8,12), dim G = 32"
  assert "flags pt in P^3 in P^5" pointed == 11 cite "V_14 codimension count: dim P = 11"
  assert "v14 with a sigma_{4,2}-plane" family == 43 cite "V_14 codimension count: dim G + dim P = 32 + 11 = 43"
  assert "dim Gr(11,15)" grassdim(11, 15) == 44 cite "V_14 codimension count: dim Gr(11,15) = 44"
  assert "v14 codim" grassdim(11, 15) - family == 1 cite "V_14 codimension count: codimension 1"
  assert "quadrics through F" quadrics == 12 cite "V_12 dimension count: 5 + 7 = 12"
  assert "dim Gr(2,12)" grassdim(2, quadrics) == 20 cite "V_12 dimension count: pencils in Gr(2,12), dim 20"
  assert "v12 family" grassdim(2, quadrics) - 7 == 13 cite "V_12 dimension count: 20 - 7 = 13"
  assert "v12 codim" 15 - (grassdim(2, quadrics) - 7) == 2 cite "V_12 dimension count: against moduli dimension 15"
  note "The moduli dimension 15 of genus 7 Mukai fourfolds is taken as given, not computed."
}

scenario "v12-link" {
  profile W22 h4 4 index 3 ambient ci6_2_2 codim 0 chi 1 euler 12
  center surface hhc 5 hkc -5 kc2 5 euler 7 c2xc 25 rational
  let L = 2*H - E
  let D = H - E
  assert "L^4" quartic(L, L, L, L) == 12 cite "V_12 link: L^4 = (2 rho^*H - E)^4 = 12"
  assert "genus" mukaigenus(quartic(L, L, L, L)) == 7 cite "V_12 link: g = L^4/2 + 1 = 7"
  assert "chi(L)" chi(L) == 10 cite "V_12 link: dim |2 rho^*H - E| = 9"
  assert "L^3.D" quartic(L, L, L, D) == 0 cite "V_12 link: (2 rho^*H - E)^3.D = -12(k-1) at k = 1"
  assert "L^3.(H-2E)" quartic(L, L, L, H - 2*E) == -12 cite "(2 rho^*H - E)^3.(rho^*H - kE) = -12(k-1) at k = 2"
  assert "L^2.D^2" quartic(L, L, D, D) == -1 cite "V_12 link: (2 rho^*H - E)^2.D^2 = -1"
  assert "deg phi(D)" inferdeg(L, D, 2) == 1 cite "V_12 link: L^2.phi(D) = 1"
  assert "c_2(N) of the quintic del Pezzo surface" c2n() == 8 cite "c(N) c(T_F) = c(T_W)|_F"
  assert "quintic del Pezzo Noether" noether(5, 7) == true cite "K^2 + Eu = 5 + 7 = 12"
  assert "quintic del Pezzo rk Pic" picrank(5) == 5 cite "P^2 blown up in 4 points"
}

scenario "v14-link" {
  profile V14 h4 14 index 2 ambient gr2_6 codim 4 chi 1 euler 12
  center plane sigma[4,2]
  let L = H - E
  let D = H - 2*E
  assert "L^4" quartic(L, L, L, L) == 5 cite "V_14 link: L^4 = (rho^*H - E)^4 = 5"
  assert "chi(L)" chi(L) == 8 cite "V_14 link: dim |rho^*H - E| = 7"
  assert "L^3.D" quartic(L, L, L, D) == 0 cite "V_14 link: D = H^* - 2E is contracted"
  assert "printed L^3.(H-3E)" quartic(L, L, L, H - 3*E) == -5 cite "V_14 link: the printed (rho^*H - E)^3.(rho^*H - 3E) = 0 evaluates to -5"
  assert "L^2.D^2" quartic(L, L, D, D) == -7 cite "V_14 link: (rho^*H - E)^2.D^2 = -7"
  assert "deg upsilon(E)" quartic(L, L, L, E) == 5 cite "V_14 link: deg upsilon(E) = (rho^*H - E)^3.E = 5"
  assert "E^4" quartic(E, E, E, E) == 1 cite "E^4 = 2 + 6 - 3 - 4"
  assert "L.D^3" quartic(L, D, D, D) == -16 cite "multilinear expansion"
  assert "D^4" quartic(D, D, D, D) == -26 cite "multilinear expansion"
  assert "c_2(N) of the plane" c2n() == nc2(sigma[4,2]) cite "Whitney data agree with the Schubert computation"
  assert "L^2.F" inferdeg(L, D, 3) == 7 cite "V_14 link: L^2.F = 7"
  assert "L.(-K_F)" -inferlkf(L, D, 3) == 5 cite "V_14 link: L.(-K_F) = 5"
  assert "Eu(blowup)" euler() == 15 cite "Eu(V) + Eu(P^2) = 12 + 3"
  let euF = euler() - eu(gr2_5, 2)
  let kF2 = 12 - euF
  assert "Eu(F)" euF == 9 cite "V_14 link: Eu(F) = 9"
  assert "K_F^2" kF2 == 3 cite "V_14 link: K_F^2 = 3 by Noether"
  assert "Noether for F" noether(kF2, euF) == true cite "K^2 + Eu = 12"
  assert "rk Pic(F)" picrank(kF2) == 7 cite "V_14 link: rk Pic(F) = 7"
  assert "c_2(W_5).F" inferc2e(L, D, 3) + euF == 31 cite "D^4 = c_2.F - r L.K_F - Eu(F) - r^2 L^2.F"
  assert "genus of a hyperplane section of F" genus(inferlkf(L, D, 3), inferdeg(L, D, 3)) == 2 cite "V_14 link: smooth curve of genus 2"
  note "The printed relation (rho^*H - E)^3.(rho^*H - 3E) = 0 is a suspected typo: its value is -5. The divisor contracted by the link is H^* - 2E, for which the product is 0."
}

scenario "w22-line-link" {
  profile W22 h4 4 index 3 ambient ci6_2_2 codim 0 chi 1 euler 12
  center curve genus 0 hc 1
  let L = H - E
  let D = 2*H - 3*E
  assert "L^4" quartic(L, L, L, L) == 1 cite "W_22 line link: L^4 = (rho^*H - E)^4 = 1"
  assert "L^3.D" quartic(L, L, L, D) == 0 cite "W_22 line link: (rho^*H - E)^3.(2 rho^*H - 3E) = 0"
  assert "L^2.D^2" quartic(L, L, D, D) == -5 cite "W_22 line link: L^2.D^2 = -5"
  assert "chi(L)" chi(L) == 5 cite "W_22 line link: dim |rho^*H - E| = 4"
  assert "E^4" quartic(E, E, E, E) == 1 cite "E^4 = -K.C + 2g - 2 = 3 - 2"
  assert "c2 coefficient of A" c2a() == -5 cite "c_2 = rho^*c_2 + (2g - 2 + K.C) A"
  note "The c_2 formula for a blown-up curve uses the coefficient 2g - 2 + K.C of the fibre class. With the printed 6g - 6 - K.C, chi(H - E) on this model would be 102/24."
}

scenario "w5-invariants" {
  profile W5 h4 5 index 3 ambient gr2_5 codim 2 chi 1 euler 6
  assert "c_1(W)" chern(1) == 3*sigma[1] cite "W_5 index 3: c_1(W) = 3 sigma_{1,0}"
  assert "c_2(W)" chern(2) == 4*sigma[2] + 5*sigma[1,1] cite "W_5 Chern classes: c_2(W) = 4 sigma_{2,0} + 5 sigma_{1,1}"
  assert "H^4 on W" sdegree(sigma[1]^4) == 5 cite "W_5 is a del Pezzo fourfold of degree 5"
  assert "c_2(W).H^2" sdegree(chern(2)*sigma[1]^2) == 22 cite "4*3 + 5*2"
  assert "Eu(W)" seuler() == 6 cite "W_5 Chern classes: Eu(W) = 6"
  assert "N of Xi" [[nc1(sigma[2,2]), nc2(sigma[2,2])]] == [[0, 2]] cite "sigma_{2,2}-plane in W_5: c_2(N_{Lambda/W}) = 2"
  assert "N of Pi" [[nc1(sigma[3,1]), nc2(sigma[3,1])]] == [[0, 1]] cite "sigma_{3,1}-plane in W_5: 4 sigma_{2,0}.Lambda + 5 sigma_{1,1}.Lambda - 3 = 1"
  assert "intersection matrix" planes(sigma[2,2], sigma[3,1], 2, 3) == [[2, -1], [-1, 1]] cite "W_5 planes: Xi^2 = 2, Pi^2 = 1, Pi.Xi = -1"
  assert "unimodular" det(planes(sigma[2,2], sigma[3,1], 2, 3)) == 1 cite "W_5 planes: the intersection matrix of Xi and Pi is unimodular"
  note "Only unimodularity of the 2x2 matrix is checked; the rank of H^4(W, Z) is not verified."
}

scenario "w5-pi-link" {
  profile W5 h4 5 index 3 ambient gr2_5 codim 2 chi 1 euler 6
  center plane sigma[3,1]
  let L = H - E
  let KE = -3*H + 2*E
  assert "L^4" quartic(L, L, L, L) == 0 cite "W_5 Pi link: L^4 = (rho^*H - E)^4 = 0"
  assert "L^3.E" quartic(L, L, L, E) == 2 cite "W_5 Pi link: (rho^*H - E)^3.E = 2"
  assert "chi(L)" chi(L) == 5 cite "W_5 Pi link: dim |rho^*H - E| = 4"
  assert "Eu(blowup)" euler() == 9 cite "W_5 Pi link: Eu = Eu(W) + 3 = 9"
  assert "(K + E)^3.E" quartic(KE, KE, KE, E) == -46 cite "adjunction: K_E^3 = (K + E)^3.E"
  assert "K^3 of a blown-up quadric threefold" k3blowup(-54, -3, 0) == -46 cite "K^3 - 2K.C + 2 - 2g"
  assert "deg Y" solve(-52, 6, quartic(KE, KE, KE, E)) == 1 cite "W_5 Pi link: deg Y = 1"
  assert "two-dimensional fibres" solve(8, 1, euler()) == 1 cite "W_5 Pi link: Eu = 8 + n"
  assert "Eu bookkeeping" eu(gr2_5, 2) + 3 == euler() cite "6 + 3 = 9"
}

scenario "w5-xi-link" {
  profile W5 h4 5 index 3 ambient gr2_5 codim 2 chi 1 euler 6
  center plane sigma[2,2]
  let L = H - E
  assert "L^4" quartic(L, L, L, L) == 1 cite "W_5 Xi link: (H^* - E)^4 = 1"
  assert "L^3.E" quartic(L, L, L, E) == 1 cite "W_5 Xi link: (H^* - E)^3.E = 1"
  assert "L^3.(H-2E)" quartic(L, L, L, H - 2*E) == 0 cite "W_5 Xi link: 2 - k >= 0 at k = 2"
  assert "c_2(N) of Xi" c2n() == nc2(sigma[2,2]) cite "Whitney data agree with the Schubert computation"
}
)scn";

/// Parses the embedded source. The result is sorted by name.
inline std::vector<Scenario> builtin_scenarios() {
  return dsl::parse(kBuiltinSource).scenarios;
}

inline const Scenario* find_scenario(const std::vector<Scenario>& all, std::string_view name) {
  for (const auto& s : all)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace fano
