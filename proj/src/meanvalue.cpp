#include "zetatail/meanvalue.hpp"

#include <cmath>
#include <vector>

#include "zetatail/smoothing.hpp"
#include "zetatail/special.hpp"
#include "zetatail/zeta.hpp"

namespace zetatail {

namespace {

using Mat = std::vector<std::vector<Interval>>;
using Arr4 = std::vector<std::vector<std::vector<std::vector<Interval>>>>;

constexpr long kT0 = 4;  // built-in assembly threshold

Interval half() { return Interval::from_ratio(1, 2); }

bool is_exact_point(const Interval& x, const cpp_rational& v) {
  return x.is_point() && x.contains(v);
}

long floor_to_long(const Interval& x) {
  const double lo = x.lo_double();
  if (!(lo >= 1.0) || lo > 9e14) throw DomainError("cutoff floor out of range");
  return static_cast<long>(std::floor(lo));
}

Mat make_mat(int rows, int cols) { return Mat(rows, std::vector<Interval>(cols)); }

Arr4 make_arr4(int a, int b, int c, int d) {
  return Arr4(a, std::vector<std::vector<std::vector<Interval>>>(
                     b, std::vector<std::vector<Interval>>(c, std::vector<Interval>(d))));
}

// --- the sigma = 1/2 collector: C[i][j] multiplies T^{1-i/2} (log T)^{3/2-j/2}
Mat cz12_string(const Mat& f11, const Mat& f12, const Mat& f13, const Interval& rho,
                const Interval& E) {
  Mat C = make_mat(6, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      if (2 * i - 2 >= 0) {
        C[2 * i - 2][2 * j + 1] += f11[i][j];
        C[2 * i - 2][2 * j + 2] += rho * f11[i][j];
      }
      C[2 * i][2 * j] += f13[i][j] / rho;
      C[2 * i][2 * j + 1] += (E / 2 - 1) * f11[i][j] + E * f12[i][j] + f13[i][j];
      C[2 * i][2 * j + 2] += rho * ((E / 2 - 1) * f11[i][j] + E * f12[i][j]);
    }
  return C;
}

// --- the sigma = 1 collector: C[i][j] multiplies T^{1-i/2} (log T)^{1-j}.
// index selects where the 1/rho block lands (0: odd rows, 1: even rows).
Mat cz1_string(const Mat& f11, const Mat& f12, const Mat& f13, const Interval& rho,
               int index, const Interval& E) {
  Mat C = make_mat(8, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      C[2 * i][j] += f11[i][j];
      C[2 * i + 1][j] += rho * f11[i][j];
      if (index == 0)
        C[2 * i + 1][j] += f13[i][j] / rho;
      else
        C[2 * i][j] += f13[i][j] / rho;
      C[2 * i + 2][j] += (E / 2 - 1) * f11[i][j] + E * f12[i][j] + f13[i][j];
      C[2 * i + 3][j] += rho * ((E / 2 - 1) * f11[i][j] + E * f12[i][j]);
    }
  return C;
}

// Merges all the terms from (i0, j0) downwards at the threshold T0, taking a
// supremum correction per term and dropping negative contributions.  The
// in-loop zeta(2) adjustment for the 8-row layout is kept exactly as the
// collector expects it (it lands on C[2][1] before that entry is consumed).
Interval cz_fix_coeff(Mat C, int length, int i0, int j0, int sign) {
  const Interval z2 = zeta_int(2);
  const Interval tz = Interval::from_long(kT0);
  const Interval logtz = log(tz);
  const Interval e1 = exp(Interval::from_long(1));
  Interval S;
  int i = i0;
  int j = j0;
  while (i < length) {
    while (j < static_cast<int>(C[i].size())) {
      if (length == 8 && sign != 0) C[2][1] += z2 * sign;
      Interval corr;
      if (length == 6)
        corr = pow(tz, Interval::from_ratio(i0 - i, 2)) *
               pow(logtz, Interval::from_ratio(j0 - j, 2));
      else
        corr = pow(tz, Interval::from_ratio(i0 - i, 2)) * pow_si(logtz, j0 - j);
      if (i0 - i < 0 && j0 - j > 0) {
        // the ratio peaks inside (T0, inf) when T0 < e^{a/b}
        const int num = (length == 6) ? (j0 - j) : 2 * (j0 - j);
        const Interval ab = Interval::from_ratio(num, i - i0);
        Interval peak;
        if (length == 6)
          peak = pow(ab / e1, Interval::from_ratio(j0 - j, 2));
        else
          peak = pow_si(ab / e1, j0 - j);
        if (ab.certainly_gt(logtz))
          corr = peak;
        else if (!ab.certainly_lt(logtz))
          corr = imax(corr, peak);
      }
      Interval summand = C[i][j] * corr;
      if (i != i0 || j != j0) summand = imax(Interval(), summand);
      S += summand;
      j += 1;
    }
    j = 0;
    i += 1;
  }
  return S;
}

// --- the sigma in (1/2,1) collector: C[i][j][l][k] multiplies
// T^{(1-i)/... } channels; k indexes {1, 1/(1-s), 1/(1-s)^2, 1/(2s-1),
// 1/((1-s)(2s-1))} after the zeta channel (k = 5 on input) is eliminated.
Arr4 cz121_string(const Arr4& f21, const Arr4& f22, const Arr4& f23, const Interval& rho,
                  const Interval& H) {
  const Interval sqrt1pH = sqrt(1 + H);
  Arr4 C = make_arr4(6, 2, 2, 5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) {
        for (int k = 0; k < 5; ++k) {
          C[2 * i][j][l][k] += f21[i][j][l][k] + f22[i][j][l][k] + f23[i][j][l][k];
          C[2 * i + 1][j][l][k] += rho * (f21[i][j][l][k] + f22[i][j][l][k]);
          if (2 * i - 1 >= 0) C[2 * i - 1][j][l][k] += sqrt1pH * f23[i][j][l][k] / rho;
        }
        const Interval z_all = f21[i][j][l][5] + f22[i][j][l][5] + f23[i][j][l][5];
        C[2 * i][j][l][3] += z_all;
        C[2 * i][j][l][0] += H * z_all;
        C[2 * i + 1][j][l][3] += sqrt1pH * rho * (f21[i][j][l][5] + f22[i][j][l][5]);
        if (2 * i - 1 >= 0) {
          C[2 * i - 1][j][l][3] += sqrt1pH * f23[i][j][l][5] / rho;
          C[2 * i - 1][j][l][0] += sqrt1pH * H * f23[i][j][l][5] / rho;
        }
      }
  return C;
}

std::array<Interval, 5> cz_var_coeff(const Arr4& C) {
  const Interval tz = Interval::from_long(kT0);
  const Interval logtz = log(tz);
  std::array<Interval, 5> S{};
  int i = 0;
  int j = 1;
  while (i <= 5) {
    while (j <= 1) {
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 5; ++k) {
          const Interval& c = C[i][j][l][k];
          if (j == 0 && l == 0 && !(c.contains_zero() && c.is_point()))
            throw DomainError("unexpected log-heavy contribution in the collector");
          Interval corr = pow(tz, Interval::from_ratio(1 - i - j, 2));
          if (j != 0) corr *= pow_si(logtz, 1 - l);
          S[k] += imax(Interval(), c * corr);
        }
      j += 1;
    }
    j = 0;
    i += 1;
  }
  return S;
}

// --- generic-lower-extremum collector (substitution sigma <-> 1-sigma):
// N[i][j][l][k] multiplies T^{1-i/2+j*sigma} (log T)^{1-l} times
// {1, 1/s, 1/(1-2s)}; the zeta(2-2s) channel of the inputs is folded first.
Arr4 n_string(Arr4 f11, Arr4 f12, Arr4 f13, const Interval& rho, const Interval& H) {
  const Interval sqrtH = sqrt(H);
  Arr4 N = make_arr4(8, 4, 2, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) {
        f11[i][j][l][2] += f11[i][j][l][3];
        f11[i][j][l][0] += H * f11[i][j][l][3];
        f12[i][j][l][2] += f12[i][j][l][3];
        f12[i][j][l][0] += H * f12[i][j][l][3];
        f13[i][j][l][2] += f13[i][j][l][3];
        f13[i][j][l][0] += H * f13[i][j][l][3];
        for (int k = 0; k < 3; ++k) {
          const Interval E = meanvalue_constant_E();
          N[2 * i][2 * j][l][k] += f11[i][j][l][k];
          N[2 * i + 1][2 * j + 1][l][k] += rho * f11[i][j][l][k];
          N[2 * i + 2][2 * j][l][k] +=
              (E / 2 - 1) * f11[i][j][l][k] + E * f12[i][j][l][k] + f13[i][j][l][k];
          N[2 * i + 3][2 * j + 1][l][k] +=
              rho * ((E / 2 - 1) * f11[i][j][l][k] + E * f12[i][j][l][k] +
                     f13[i][j][l][k]);
          if (2 * j - 1 >= 0 && k == 0) {
            N[2 * i][2 * j - 1][l][2] += f13[i][j][l][k] / rho;
            N[2 * i][2 * j - 1][l][0] += sqrtH * f13[i][j][l][k] / rho;
          }
        }
      }
  return N;
}

std::array<Interval, 3> n_coeff(Arr4 N, int sign, const Interval& H) {
  const Interval tz = Interval::from_long(kT0);
  const Interval logtz = log(tz);
  const Interval e1 = exp(Interval::from_long(1));
  std::array<Interval, 3> S{};
  for (int i = 0; i <= 7; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int l = 0; l <= 1; ++l)
        for (int k = 0; k <= 2; ++k) {
          Interval summand;
          if (i < 2 || j - i > 0 || ((i == 2 || j - i == 0) && l == 0)) {
            // order higher than the target exponent: removed beforehand
          } else if (i == 2 && j == 2 && l == 1) {
            summand = N[i][j][l][k];
          } else {
            // undo the folded zeta(2-2s)*(-u) contribution in its channels
            if (i == 2 && j == 0 && l == 1 && k == 2)
              N[i][j][l][k] += Interval::from_long(sign);
            if (i == 2 && j == 0 && l == 1 && k == 0) N[i][j][l][k] += H * sign;
            Interval corr = pow(tz, Interval::from_ratio(std::max(2 - i, j - i), 2)) *
                            pow_si(logtz, 1 - l);
            // log(x)/sqrt(x) peaks at e^2 > T0
            if (std::min(2 - i, j - i) == -1 && l == 0) corr = 2 / e1;
            summand = imax(Interval(), N[i][j][l][k] * corr);
          }
          S[k] += summand;
        }
  return S;
}

Arr4 arr_with(int d0, int d3, std::initializer_list<std::pair<std::array<int, 4>, Interval>> e) {
  Arr4 a = make_arr4(d0, 2, 2, d3);
  for (const auto& [idx, v] : e) a[idx[0]][idx[1]][idx[2]][idx[3]] = v;
  return a;
}

SecondApproachConstants assemble() {
  SecondApproachConstants out;
  const Interval g = Interval::euler_gamma();
  const Interval E = meanvalue_constant_E();
  const Interval z2 = zeta_int(2);
  const Interval H = z2 - 1;
  const Interval Dz = d_constant(kT0).D;
  const Interval pi = Interval::pi();
  out.e_const = E;
  out.h_const = H;
  out.dz = Dz;
  out.k1 = exp(Interval::from_ratio(3, 4)) - 1;
  const Interval empi = exp(-pi);
  out.k2 = 2 * out.k1 + sqr(out.k1) + 2 * empi + 4 * out.k1 * empi + 2 * sqr(out.k1) * empi;

  const Interval one = Interval::from_long(1);
  const Interval zero;

  // sigma = 1/2 tables (entry [i][j] multiplies T^{1-i} (log T)^{1-j})
  Mat f11_12_u = {{zero, zero}, {one, g}, {zero, half()}};
  Mat f12_12_u = {{zero, one}, {zero, zero}, {zero, zero}};
  Mat f13_12_u = {{zero, one}, {2 * Dz, sqr(Dz) - 1}, {zero, -sqr(Dz)}};
  Mat f11_12_l = {{zero, zero}, {-one, -g}, {zero, Interval::from_ratio(2, 3)}};
  Mat f12_12_l = {{zero, -one},
                  {zero, half() - zeta_real(Interval::from_long(0))},
                  {zero, zero}};
  Mat f13_12_l = {{zero, -one}, {-2 * Dz, 1 - sqr(Dz)}, {zero, sqr(Dz)}};

  out.cz12_ua = cz12_string(f11_12_u, f12_12_u, f13_12_u, one, E)[0][2];
  out.cz12_ub = cz_fix_coeff(cz12_string(f11_12_u, f12_12_u, f13_12_u, one, E), 6, 0, 3, 0);
  out.cz12_la = cz12_string(f11_12_l, f12_12_l, f13_12_l, -one, E)[0][2];
  out.cz12_lb = cz_fix_coeff(cz12_string(f11_12_l, f12_12_l, f13_12_l, -one, E), 6, 0, 3, 0);

  // sigma = 1 tables
  const Interval rho1 = 1 / sqrt(z2);
  Mat f11_1_u = {{zero, z2}, {zero, -one}, {zero, half()}};
  Mat f12_1_u = {{one, g}, {zero, half()}, {zero, zero}};
  Mat f13_1_u = f13_12_u;
  Mat f11_1_l = {{zero, -z2}, {zero, one}, {zero, half()}};
  Mat f12_1_l = {{-one, -g}, {zero, Interval::from_ratio(2, 3)}, {zero, zero}};
  Mat f13_1_l = f13_12_l;

  out.cz1_u = cz_fix_coeff(cz1_string(f11_1_u, f12_1_u, f13_1_u, rho1, 0, E), 8, 2, 0, 0);
  out.cz1_l = cz_fix_coeff(cz1_string(f11_1_l, f12_1_l, f13_1_l, -rho1, 0, E), 8, 2, 0, 0);
  out.cz1gen_u =
      cz_fix_coeff(cz1_string(f11_1_u, f12_1_u, f13_1_u, rho1, 1, E), 8, 2, 0, 1);
  out.cz1gen_l =
      cz_fix_coeff(cz1_string(f11_1_l, f12_1_l, f13_1_l, -rho1, 1, E), 8, 2, 0, -1);
  out.cz1_coarse =
      cz_fix_coeff(cz1_string(f11_1_u, f12_1_u, f13_1_u, rho1, 0, E), 8, 1, 1, 0);

  // sigma in (1/2,1) tables (entry [i][j][l][k])
  const Interval rho121 = 1 + Dz;
  const Interval Ee = E / 4;
  Arr4 f21u = arr_with(3, 6, {{{0, 0, 1, 5}, one}, {{1, 0, 1, 5}, -one}});
  Arr4 f22u = arr_with(3, 6,
                       {{{0, 1, 0, 1}, one},
                        {{0, 1, 1, 1}, Ee + g},
                        {{0, 1, 1, 2}, one},
                        {{1, 0, 1, 5}, Ee - 1},
                        {{1, 1, 1, 1}, half()},
                        {{1, 1, 1, 3}, Ee - 1},
                        {{2, 1, 1, 0}, half() * (Ee - 1)}});
  Arr4 f23u = arr_with(3, 6, {{{1, 0, 1, 3}, sqr(1 + Dz)}});
  Arr4 f21l = arr_with(3, 6,
                       {{{0, 0, 1, 5}, -one},
                        {{0, 1, 1, 4}, half()},
                        {{1, 0, 1, 3}, -one},
                        {{1, 0, 1, 4}, -half()},
                        {{1, 0, 1, 5}, one},
                        {{1, 1, 1, 3}, one}});
  Arr4 f22l = f22u;
  Arr4 f23l = arr_with(3, 6, {{{1, 0, 1, 3}, -sqr(1 + Dz)}});

  out.cz121_u = cz_var_coeff(cz121_string(f21u, f22u, f23u, rho121, H));
  out.cz121_l = cz_var_coeff(cz121_string(f21l, f22l, f23l, -rho121, H));

  // generic-lower-extremum tables (entry [i][j][l][k], zeta channel k = 3)
  Arr4 f11N_u = arr_with(3, 4,
                         {{{0, 0, 1, 3}, one}, {{1, 1, 1, 2}, -one}, {{2, 1, 1, 0}, half()}});
  Arr4 f12N_u = arr_with(3, 4, {{{0, 1, 1, 1}, half()}});
  Arr4 f13N_u = arr_with(3, 4,
                         {{{0, 1, 1, 0}, one},
                          {{1, 1, 0, 0}, 2 * Dz},
                          {{1, 1, 1, 0}, sqr(Dz) - 1},
                          {{2, 1, 1, 0}, -sqr(Dz)}});
  Arr4 f11N_l = arr_with(3, 4,
                         {{{0, 0, 1, 3}, -one}, {{1, 1, 1, 2}, one}, {{2, 1, 1, 0}, half()}});
  Arr4 f12N_l = arr_with(3, 4,
                         {{{0, 0, 1, 1}, half()}, {{0, 1, 1, 1}, -half()}, {{1, 1, 1, 0}, half()}});
  Arr4 f13N_l = arr_with(3, 4,
                         {{{0, 1, 1, 0}, -one},
                          {{1, 1, 0, 0}, -2 * Dz},
                          {{1, 1, 1, 0}, 1 - sqr(Dz)},
                          {{2, 1, 1, 0}, sqr(Dz)}});

  out.n_u = n_coeff(n_string(f11N_u, f12N_u, f13N_u, one, H), 1, H);
  out.n_l = n_coeff(n_string(f11N_l, f12N_l, f13N_l, -one, H), -1, H);

  const Interval sqrtH = sqrt(H);
  out.s_u_1 = 2 * out.n_u[1];
  out.s_u_12 = 2 * out.n_u[2] + 6 + 3 * Dz;
  out.s_u_0 = 2 * out.n_u[0] + 6 * sqrtH + 3 * Dz * sqrtH;
  out.s_l_1 = 2 * out.n_l[1];
  out.s_l_12 = 2 * out.n_l[2] + 6 + 3 * Dz + 1;
  out.s_l_0 = 2 * out.n_l[0] + 6 * sqrtH + 3 * Dz * sqrtH + H;

  out.l_u_1 = out.s_u_1 + out.k2 * out.cz121_u[1];
  out.l_u_11 = out.k2 * out.cz121_u[2];
  out.l_u_12 = out.s_u_12 + out.k2 * (1 + out.cz121_u[3]);
  out.l_u_0 = out.s_u_0 + out.k2 * (H + out.cz121_u[0]);
  out.l_l_1 = out.s_l_1 + out.k2 * out.cz121_u[1];
  out.l_l_11 = out.k2 * out.cz121_u[2];
  out.l_l_12 = out.s_l_12 + out.k2 * (1 + out.cz121_u[3]);
  out.l_l_0 = out.s_l_0 + out.k2 * (H + out.cz121_u[0]);

  const Interval tz = Interval::from_long(kT0);
  const Interval sqrt23 = sqrt(Interval::from_ratio(2, 3));
  out.cz0_u_a = out.cz1gen_u / (2 * pi);
  out.cz0_u_b = sqrt23 + out.k2 / (2 * pi) *
                             (sqr(pi) / 6 + pi * sqrt23 / sqrt(tz) + out.cz1_u * log(tz) / tz);
  out.cz0_l_a = out.cz1gen_l / (2 * pi);

  out.c12_a = 2 * out.cz12_ua;
  out.c12_b = 2 + 2 * out.cz12_ub + out.cz12_ua / sqrt(log(tz));
  out.c1_a = out.cz1gen_u;
  out.c1_b = pi * sqrt23 * Interval::from_ratio(4, 3) + out.cz1gen_u / 2;
  return out;
}

Interval from_rat(const cpp_rational& q) { return Interval::from_rational(q); }

cpp_rational round_up2(const Interval& x) {
  return cpp_rational(x.round_up_scaled(2), 100);
}
cpp_rational round_down2(const Interval& x) {
  return cpp_rational(x.round_down_scaled(2), 100);
}

}  // namespace

const SecondApproachConstants& second_approach_constants() {
  static const SecondApproachConstants cached = assemble();
  return cached;
}

SegmentBound segment_bound_fixed_cutoff(const Interval& sigma, const Interval& T1,
                                        const Interval& T2, const Interval& rho) {
  if (!rho.certainly_positive()) throw DomainError("splitting parameter must be positive");
  if (!T1.certainly_ge(Interval::from_long(1)) || !T2.certainly_ge(T1))
    throw DomainError("need 1 <= T1 <= T2");
  const bool at_half = is_exact_point(sigma, cpp_rational(1, 2));
  const bool at_one = is_exact_point(sigma, cpp_rational(1, 1));
  const bool mid = sigma.certainly_gt(half()) && sigma.certainly_lt(Interval::from_long(1));
  if (!at_half && !at_one && !mid)
    throw DomainError("sigma must lie in [1/2, 1] without straddling the cases");

  const Interval E = meanvalue_constant_E();
  const Interval D = d_constant(floor_to_long(T2)).D;
  const Interval g = Interval::euler_gamma();
  const Interval logT2 = log(T2);
  const Interval two_s = 2 * sigma;

  const Interval R = pow(T2, 2 - two_s) * (1 / T1 - 1 / T2) +
                     sqr(D) * (T2 - T1) / pow(T2, two_s) +
                     2 * D * pow(T2, 1 - two_s) * log(T2 / T1);

  Interval f11u, f11l, f12u;
  if (at_half) {
    f11u = logT2 + g + 1 / (2 * T2);
    f11l = logT2 + g - 2 / (3 * T2);
  } else {
    const Interval z = zeta_real(two_s);
    const Interval mid_term = pow(T2, 1 - two_s) / (two_s - 1);
    f11u = z - mid_term + 1 / (2 * pow(T2, two_s));
    f11l = z - mid_term - 1 / (2 * pow(T2, two_s));
  }
  if (at_one) {
    f12u = logT2 + g + 1 / (2 * T2);
  } else {
    f12u = pow(T2, 2 - two_s) / (2 * (1 - sigma));
  }

  SegmentBound out{sigma, T1, T2, Interval(), Interval()};
  const Interval len = T2 - T1 + E / 2;
  out.upper = (1 + rho) * (len * f11u + E * f12u) + (1 + 1 / rho) * R;
  // The mean-value error is two-sided, so the lower bound subtracts E times
  // the same upper enclosure of the weighted coefficient sum.
  if (rho.certainly_lt(Interval::from_long(1)))
    out.lower = (1 - rho) * (len * f11l - E * f12u) + (1 - 1 / rho) * R;
  return out;
}

SegmentBound segment_bound_moving_cutoff(const Interval& sigma, const Interval& T1,
                                         const Interval& T2, const Interval& rho) {
  if (!rho.certainly_positive()) throw DomainError("splitting parameter must be positive");
  if (!T1.certainly_ge(Interval::from_long(1)) || !T2.certainly_ge(T1))
    throw DomainError("need 1 <= T1 <= T2");
  const bool at_half = is_exact_point(sigma, cpp_rational(1, 2));
  const bool at_one = is_exact_point(sigma, cpp_rational(1, 1));
  const bool mid = sigma.certainly_gt(half()) && sigma.certainly_lt(Interval::from_long(1));
  if (!at_half && !at_one && !mid)
    throw DomainError("sigma must lie in [1/2, 1] without straddling the cases");

  const Interval E = meanvalue_constant_E();
  const Interval D = d_constant(floor_to_long(T2)).D;
  const Interval g = Interval::euler_gamma();
  const Interval logT1 = log(T1);
  const Interval logT2 = log(T2);
  const Interval two_s = 2 * sigma;
  const Interval Ee = E / 4;

  Interval f21u, f21l, f22u, f23;
  if (at_half) {
    const Interval base = T2 * logT2 - T1 * logT1 - (1 - g) * (T2 - T1);
    f21u = base + (logT2 - logT1) / 2;
    f21l = base - Interval::from_ratio(2, 3) * (logT2 - logT1);
    f22u = 2 * T2 * logT2 + (2 * g + E / 2 + 4) * T2 + (Ee - 1) * logT2 + 1 +
           (Ee - 1) * g + (Ee - 1) / (2 * T2);
    f23 = sqr(1 + D) * log(T2 / T1);
  } else {
    const Interval z = at_one ? zeta_int(2) : zeta_real(two_s);
    f21u = z * (T2 - T1);
    if (at_one) {
      // limiting form of the power-difference terms
      f21l = z * (T2 - T1) - log(T2 / T1) - (1 / T2 - 1 / T1) / 2;
      f22u = 3 * sqr(logT2) + (6 * g + E / 2) * logT2 + 3 * sqr(g) + E * g / 2 +
             (Ee - 1) * zeta_int(2) + 3 * logT2 / T2 + (3 * g + 1) / T2 +
             (E + 2) / (8 * sqr(T2));
    } else {
      f21l = z * (T2 - T1) -
             (pow(T2, 2 - two_s) - pow(T1, 2 - two_s)) / (2 * (1 - sigma) * (two_s - 1)) -
             (pow(T2, 1 - two_s) - pow(T1, 1 - two_s)) / (2 * (two_s - 1));
      f22u = pow(T2, 2 - two_s) * logT2 / (1 - sigma) +
             (Ee + g + 1 / (1 - sigma)) * pow(T2, 2 - two_s) / (1 - sigma) +
             (Ee - 1) * z + ((Ee - 1) / (two_s - 1) + 1 / (2 * (1 - sigma))) *
                                pow(T2, 1 - two_s) +
             (Ee - 1) / (2 * pow(T2, two_s));
    }
    f23 = sqr(1 + D) / (two_s - 1);
  }

  SegmentBound out{sigma, T1, T2, Interval(), Interval()};
  out.upper = (1 + rho) * (f21u + f22u) + (1 + 1 / rho) * f23;
  if (rho.certainly_lt(Interval::from_long(1)))
    out.lower = (1 - rho) * (f21l - f22u) + (1 - 1 / rho) * f23;
  return out;
}

namespace {

// shared case dispatch for the finite mean-square bounds
enum class StripCase { AtZero, Low, AtHalf, High, AtOne };

StripCase classify(const Interval& sigma) {
  if (is_exact_point(sigma, cpp_rational(0, 1))) return StripCase::AtZero;
  if (is_exact_point(sigma, cpp_rational(1, 2))) return StripCase::AtHalf;
  if (is_exact_point(sigma, cpp_rational(1, 1))) return StripCase::AtOne;
  if (sigma.certainly_positive() && sigma.certainly_lt(half())) return StripCase::Low;
  if (sigma.certainly_gt(half()) && sigma.certainly_lt(Interval::from_long(1)))
    return StripCase::High;
  throw DomainError("sigma must lie in [0, 1] without straddling 0, 1/2 or 1");
}

void require_t0(const Interval& T) {
  if (!T.certainly_ge(Interval::from_long(kT0)))
    throw DomainError("T must be at least the assembly threshold 4");
}

}  // namespace

BoundReport finite_mean_square_upper(const Interval& sigma, const Interval& T) {
  require_t0(T);
  const auto& sc = second_approach_constants();
  BoundReport r;
  r.family = "finite mean-square upper";
  r.sigma = sigma;
  r.T = T;
  const Interval logT = log(T);
  switch (classify(sigma)) {
    case StripCase::AtHalf: {
      r.terms = {{"T log T", T * logT},
                 {"T sqrt(log T)", from_rat(sc.cz12_ua_pub) * T * sqrt(logT)},
                 {"T", from_rat(sc.cz12_ub_pub) * T}};
      break;
    }
    case StripCase::High: {
      const Interval cplus = from_rat(sc.cz121_u_pub[2]) / sqr(1 - sigma) +
                             from_rat(sc.cz121_u_pub[1]) / (1 - sigma) +
                             from_rat(sc.cz121_u_pub[3]) / (2 * sigma - 1) +
                             from_rat(sc.cz121_u_pub[0]);
      r.terms = {{"zeta(2 sigma) T", zeta_real(2 * sigma) * T},
                 {"C+ max{T^(2-2 sigma) log T, sqrt(T)}",
                  cplus * imax(pow(T, 2 - 2 * sigma) * logT, sqrt(T))}};
      break;
    }
    case StripCase::AtOne: {
      r.terms = {{"zeta(2) T", zeta_int(2) * T},
                 {"pi sqrt(2/3) sqrt(T)",
                  Interval::pi() * sqrt(Interval::from_ratio(2, 3)) * sqrt(T)},
                 {"log T", from_rat(sc.cz1_u_pub) * logT}};
      break;
    }
    case StripCase::Low: {
      const Interval pre = pow(2 * Interval::pi(), 2 * sigma - 1);
      const Interval lplus = pre * (from_rat(sc.l_u_11_pub) / sqr(sigma) +
                                    from_rat(sc.l_u_1_pub) / sigma +
                                    from_rat(sc.l_u_12_pub) / (1 - 2 * sigma) +
                                    from_rat(sc.l_u_0_pub));
      r.terms = {{"main T^(2-2 sigma)",
                  zeta_real(2 - 2 * sigma) * pre / (2 - 2 * sigma) * pow(T, 2 - 2 * sigma)},
                 {"L+ T", lplus * T}};
      break;
    }
    case StripCase::AtZero: {
      r.terms = {{"(pi/24) T^2", Interval::pi() / 24 * sqr(T)},
                 {"T log T", from_rat(sc.cz0_u_a_pub) * T * logT},
                 {"T", from_rat(sc.cz0_u_b_pub) * T}};
      break;
    }
  }
  for (const auto& [name, v] : r.terms) r.value += v;
  return r;
}

BoundReport finite_mean_square_lower(const Interval& sigma, const Interval& T) {
  require_t0(T);
  const auto& sc = second_approach_constants();
  BoundReport r;
  r.family = "finite mean-square lower";
  r.sigma = sigma;
  r.T = T;
  const Interval logT = log(T);
  switch (classify(sigma)) {
    case StripCase::AtHalf: {
      r.terms = {{"T log T", T * logT},
                 {"-T sqrt(log T)", -from_rat(sc.cz12_la_pub) * T * sqrt(logT)},
                 {"-T", -from_rat(sc.cz12_lb_pub) * T}};
      break;
    }
    case StripCase::High: {
      const Interval cminus = from_rat(sc.cz121_l_pub[2]) / sqr(1 - sigma) +
                              from_rat(sc.cz121_l_pub[4]) / ((1 - sigma) * (2 * sigma - 1)) +
                              from_rat(sc.cz121_l_pub[1]) / (1 - sigma) +
                              from_rat(sc.cz121_l_pub[3]) / (2 * sigma - 1) +
                              from_rat(sc.cz121_l_pub[0]);
      r.terms = {{"zeta(2 sigma) T", zeta_real(2 * sigma) * T},
                 {"-C- max{T^(2-2 sigma) log T, sqrt(T)}",
                  -cminus * imax(pow(T, 2 - 2 * sigma) * logT, sqrt(T))}};
      break;
    }
    case StripCase::AtOne: {
      r.terms = {{"zeta(2) T", zeta_int(2) * T},
                 {"-pi sqrt(2/3) sqrt(T)",
                  -Interval::pi() * sqrt(Interval::from_ratio(2, 3)) * sqrt(T)},
                 {"-log T", -from_rat(sc.cz1_l_mag_pub) * logT}};
      break;
    }
    case StripCase::Low: {
      const Interval pre = pow(2 * Interval::pi(), 2 * sigma - 1);
      const Interval lminus = pre * (from_rat(sc.l_l_11_pub) / sqr(sigma) +
                                     from_rat(sc.l_l_1_pub) / sigma +
                                     from_rat(sc.l_l_12_pub) / (1 - 2 * sigma) +
                                     from_rat(sc.l_l_0_pub));
      r.terms = {{"main T^(2-2 sigma)",
                  zeta_real(2 - 2 * sigma) * pre / (2 - 2 * sigma) * pow(T, 2 - 2 * sigma)},
                 {"-L- T", -lminus * T}};
      break;
    }
    case StripCase::AtZero: {
      r.terms = {{"(pi/24) T^2", Interval::pi() / 24 * sqr(T)},
                 {"-T log T", -from_rat(sc.cz0_l_a_pub) * T * logT},
                 {"-T", -from_rat(sc.cz0_u_b_pub) * T}};
      break;
    }
  }
  for (const auto& [name, v] : r.terms) r.value += v;
  return r;
}

BoundReport tail_bound_second_approach(const Interval& sigma, const Interval& T) {
  require_t0(T);
  const auto& sc = second_approach_constants();
  BoundReport r;
  r.family = "tail bound, mean-value route";
  r.sigma = sigma;
  r.T = T;
  const Interval logT = log(T);
  switch (classify(sigma)) {
    case StripCase::AtZero:
      throw DomainError("the tail integral diverges on the imaginary axis");
    case StripCase::Low: {
      const Interval pre = pow(2 * Interval::pi(), 2 * sigma - 1);
      const Interval lplus = pre * (from_rat(sc.l_u_11_pub) / sqr(sigma) +
                                    from_rat(sc.l_u_1_pub) / sigma +
                                    from_rat(sc.l_u_12_pub) / (1 - 2 * sigma) +
                                    from_rat(sc.l_u_0_pub));
      r.terms = {{"zeta(2-2 sigma)/(2 sigma (2 pi)^(1-2 sigma)) / T^(2 sigma)",
                  zeta_real(2 - 2 * sigma) * pre / (2 * sigma) / pow(T, 2 * sigma)},
                 {"2 L+ / T", 2 * lplus / T}};
      break;
    }
    case StripCase::AtHalf: {
      r.terms = {{"log T / T", logT / T},
                 {"sqrt(log T)/T", from_rat(sc.c12_a_pub) * sqrt(logT) / T},
                 {"1/T", from_rat(sc.c12_b_pub) / T}};
      break;
    }
    case StripCase::High: {
      const Interval z = zeta_real(2 * sigma);
      const Interval nplus = from_rat(sc.n_u_pub[1]) / (1 - sigma) +
                             from_rat(sc.n_u_pub[2]) / (2 * sigma - 1) +
                             from_rat(sc.n_u_pub[0]);
      r.terms = {{"zeta(2 sigma)/T", z / T},
                 {"(2 N+(1-sigma) + (D+4) sqrt(zeta(2 sigma))) / T^(2 sigma)",
                  (2 * nplus + (sc.dz + 4) * sqrt(z)) / pow(T, 2 * sigma)}};
      break;
    }
    case StripCase::AtOne: {
      r.terms = {{"(pi^2/6)/T", sqr(Interval::pi()) / 6 / T},
                 {"log T / T^2", from_rat(sc.c1_a_pub) * logT / sqr(T)},
                 {"1/T^2", from_rat(sc.c1_b_pub) / sqr(T)}};
      break;
    }
  }
  for (const auto& [name, v] : r.terms) r.value += v;
  return r;
}

std::pair<Interval, Interval> extension_transfer(const ExtensionSpec& spec,
                                                 const Interval& a, const Interval& b,
                                                 int cells) {
  if (cells < 1) throw DomainError("need at least one cell");
  if (!b.certainly_ge(a)) throw DomainError("need a <= b");
  if (spec.kind == ExtensionCase::LeftAnchored) {
    if (!spec.f(a).contains_zero()) throw DomainError("f must vanish at the left endpoint");
  } else {
    if (!spec.f(b).contains_zero()) throw DomainError("f must vanish at the right endpoint");
  }
  const Interval width = (b - a) / cells;
  Interval up, low;
  for (int k = 0; k < cells; ++k) {
    const Interval cell = Interval::hull(a + k * width, a + (k + 1) * width);
    const Interval fv = spec.f(cell);
    const Interval fp = spec.f_prime(cell);
    const Interval dF = spec.dF_du(cell);
    if (spec.kind == ExtensionCase::LeftAnchored) {
      if (fp.certainly_negative()) throw DomainError("f' must be nonnegative");
      up += (-fv * dF + fp * spec.r_plus(cell)) * width;
      low += (-fv * dF - fp * spec.r_minus(cell)) * width;
    } else {
      if (fp.certainly_positive()) throw DomainError("f' must be nonpositive");
      up += (fv * dF - fp * spec.r_plus(cell)) * width;
      low += (fv * dF + fp * spec.r_minus(cell)) * width;
    }
  }
  return {up, low};
}

HeadlineConstants simplify_to_headline() {
  const auto& sc = second_approach_constants();
  const auto& fa = first_approach_constants();
  const Interval pi = Interval::pi();
  const Interval th = Interval::from_long(200);
  HeadlineConstants h;

  // finite mean-square simplifications
  h.mz_1 = round_up2(sc.cz1_coarse);
  {
    const Interval max_c1 = Interval::from_ratio(1, 16);
    const Interval max_c11 = half();
    const Interval max_c2 = Interval::from_ratio(1, 4);
    const Interval max_c0 = Interval::from_ratio(1, 54);
    h.mz_121 = round_up2(sc.cz121_u[2] * max_c11 + sc.cz121_u[1] * max_c1 +
                         half() * sc.cz121_u[3] * max_c2 + sc.cz121_u[0] * max_c0);
  }
  h.mz_12_a = round_up2(sc.cz12_ua);
  h.mz_12_b = round_up2(sc.cz12_ub);

  const Interval log2pi = log(2 * pi);
  const Interval si_l1 = (log2pi - 2 + sqrt(sqr(log2pi) + 4)) / (4 * log2pi);
  const Interval max_l1 = si_l1 * (half() - si_l1) / pow(2 * pi, 1 - 2 * si_l1);
  const Interval max_l11 = (half() - si_l1) / pow(2 * pi, 1 - 2 * si_l1);
  const Interval max_l12 = Interval::from_ratio(1, 4);
  const Interval si_l0 =
      (log2pi - 3 + sqrt(sqr(log2pi) + 2 * log2pi + 9)) / (4 * log2pi);
  const Interval max_l0 = sqr(si_l0) * (half() - si_l0) / pow(2 * pi, 1 - 2 * si_l0);
  const Interval l_combo = from_rat(sc.l_u_1_pub) * max_l1 +
                           from_rat(sc.l_u_11_pub) * max_l11 +
                           half() * from_rat(sc.l_u_12_pub) * max_l12 +
                           from_rat(sc.l_u_0_pub) * max_l0;
  h.mz_012 = round_up2(l_combo);
  h.mz_0 = round_up2(from_rat(sc.cz0_u_a_pub) +
                     from_rat(sc.cz0_u_b_pub) / log(Interval::from_long(kT0)));

  // tail simplifications
  h.t_1 = round_up2(from_rat(sc.c1_a_pub) + from_rat(sc.c1_b_pub) / log(th));

  const Interval kappa = fa.kappa;
  const Interval sk = sqrt(kappa);
  h.t_121_num_a = round_up2(pi * (fa.k111 * imax(2 * sk, kappa) +
                                  fa.k112 * imax(sk / 2, kappa / 3) +
                                  fa.k113 * imax(sk / Interval::from_ratio(3, 2), kappa / 2) +
                                  fa.k12s * imax(sk, kappa) / th));
  h.t_121_num_b = round_down2(pi * fa.k114 * imin(sk, kappa) / 2);
  {
    const Interval max_n0 = Interval::from_ratio(1, 16);
    const Interval max_sqrtzeta =
        sqrt(Interval::from_ratio(1, 6)) * Interval::from_ratio(1, 3);
    h.t_121_opt = round_up2(
        2 * (sc.n_u[1] * half() + half() * sc.n_u[2] * half() + sc.n_u[0] * max_n0) +
        (sc.dz + 4) * (max_sqrtzeta / sqrt(Interval::from_long(2)) + sqrt(sc.h_const) * max_n0));
  }
  h.t_12_num = round_up2(pi * (fa.c21s + fa.c22s / th));
  h.t_12_opt = round_up2(from_rat(sc.c12_a_pub) +
                         from_rat(sc.c12_b_pub) /
                             sqrt(log(pow_si(Interval::from_long(10), 37))));
  h.t_012_num_a = round_up2(pi * fa.k111);
  h.t_012_num_b = round_up2(pi * fa.k314 * sk / 2);
  h.t_012_num_c = round_up2(pi * (fa.k111 * 2 * (sk - 1) +
                                  fa.k112 * imax(Interval::from_long(1), sk / 2) +
                                  fa.k113 * imax(Interval::from_long(1),
                                                 sk / Interval::from_ratio(3, 2))));
  {
    const Interval max_32x = imax(Interval::from_long(1), sk / th) /
                             abs(zeta_real(Interval::from_long(0)));
    h.t_012_num_d = round_up2(pi * imax(Interval(), -fa.c30s + fa.k12s * max_32x));
  }
  h.t_012_opt = round_up2(2 * l_combo);
  return h;
}

BoundReport tail_bound_headline(const Interval& sigma, const Interval& T,
                                bool use_asymptotic) {
  BoundReport r;
  r.family = use_asymptotic ? "tail headline, asymptotic form" : "tail headline, first form";
  r.sigma = sigma;
  r.T = T;
  const Interval logT = log(T);
  const Interval pi = Interval::pi();
  const auto need = [&T](long t0) {
    if (!T.certainly_ge(Interval::from_long(t0)))
      throw DomainError("T below the validity threshold of this form");
  };
  switch (classify(sigma)) {
    case StripCase::AtZero:
      throw DomainError("the tail integral diverges on the imaginary axis");
    case StripCase::AtOne: {
      need(200);
      r.terms = {{"(pi^2/6)/T", sqr(pi) / 6 / T},
                 {"log T/T^2", from_rat(cpp_rational(2806, 100)) * logT / sqr(T)}};
      break;
    }
    case StripCase::High: {
      if (use_asymptotic) {
        need(kT0);
        r.terms = {{"zeta(2 sigma)/T", zeta_real(2 * sigma) / T},
                   {"1/T^(2 sigma)",
                    from_rat(cpp_rational(1213, 100)) / ((sigma - half()) * (1 - sigma)) /
                        pow(T, 2 * sigma)}};
      } else {
        need(200);
        r.terms = {{"(3 pi/5) zeta(2 sigma)/T",
                    3 * pi * zeta_real(2 * sigma) / 5 / T},
                   {"1/T^(2 sigma)",
                    (from_rat(cpp_rational(1885, 100)) -
                     from_rat(cpp_rational(61, 100)) / (sigma - half())) /
                        pow(T, 2 * sigma)}};
      }
      break;
    }
    case StripCase::AtHalf: {
      if (use_asymptotic) {
        if (!T.certainly_ge(pow_si(Interval::from_long(10), 37)))
          throw DomainError("T below the validity threshold of this form");
        r.terms = {{"log T/T", logT / T},
                   {"sqrt(log T)/T", from_rat(cpp_rational(899, 100)) * sqrt(logT) / T}};
      } else {
        need(200);
        r.terms = {{"(3 pi/5) log T/T", 3 * pi * logT / 5 / T},
                   {"1/T", from_rat(cpp_rational(772, 100)) / T}};
      }
      break;
    }
    case StripCase::Low: {
      if (use_asymptotic) {
        need(kT0);
        r.terms = {{"main/T^(2 sigma)",
                    zeta_real(2 - 2 * sigma) * pow(2 * pi, 2 * sigma - 1) / (2 * sigma) /
                        pow(T, 2 * sigma)},
                   {"1/T", from_rat(cpp_rational(1549, 100)) /
                               (sqr(sigma) * (half() - sigma)) / T}};
      } else {
        need(200);
        r.terms = {{"1/T^(2 sigma)",
                    (from_rat(cpp_rational(50, 100)) / sigma +
                     from_rat(cpp_rational(95, 100)) / (half() - sigma) +
                     from_rat(cpp_rational(562, 100))) /
                        pow(T, 2 * sigma)},
                   {"-zeta(2 sigma)/T",
                    -from_rat(cpp_rational(66, 100)) * zeta_real(2 * sigma) / T}};
      }
      break;
    }
  }
  for (const auto& [name, v] : r.terms) r.value += v;
  return r;
}

}  // namespace zetatail
