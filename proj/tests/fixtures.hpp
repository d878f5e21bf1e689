#pragma once

// Frozen oracle values, written by gen_fixtures (tests/oracle). Each entry
// names the brute-force route that produced it.

namespace fixtures {

struct Fixture {
  const char* name;
  double re;
  double im;
  const char* provenance;
};

inline constexpr Fixture kAll[] = {
    // Stirling series with 8 Bernoulli terms at z+20, recursed down by 20 logs
    {"log_gamma(3.7+1.2i)", 1.2096321530032434, 1.4270217020402785,
     "Stirling series with 8 Bernoulli terms at z+20, recursed down by 20 logs"},
    // Euler integral with t = u^2, 1e6-panel midpoint
    {"chf(0.5,1.5,-2.5)", 0.54629197178516509, 0,
     "Euler integral with t = u^2, 1e6-panel midpoint"},
    // Euler integral split at 1/2, power substitutions at both ends, 1e6-panel midpoint
    {"gauss(0.3,0.7,1.1,-0.4)", 0.93638931363652034, 0,
     "Euler integral split at 1/2, power substitutions at both ends, 1e6-panel midpoint"},
    // Kummer Euler integral with 1 - t = v^2 composed with z^{mu+1/2} e^{-z/2}
    {"whittaker(0.25,0.75,1.5)", 1.5470540241721185, 0,
     "Kummer Euler integral with 1 - t = v^2 composed with z^{mu+1/2} e^{-z/2}"},
    // int_0^T exp(-x(cosh t - 1)) cosh(rho t) dt, 1e6-panel midpoint
    {"k_scaled(0.8,1.3)", 1.2319727553024209, 0,
     "int_0^T exp(-x(cosh t - 1)) cosh(rho t) dt, 1e6-panel midpoint"},
    // int_0^T exp(-x(cosh t - 1)) cosh(rho t) dt, 1e6-panel midpoint
    {"k_scaled(1,2)", 1.0334768470686884, 0,
     "int_0^T exp(-x(cosh t - 1)) cosh(rho t) dt, 1e6-panel midpoint"},
    // 1e6-panel midpoint (integrand flat at both ends)
    {"int_0^1 exp(-1/(t(1-t)))", 0.0070298584066096556, 0,
     "1e6-panel midpoint (integrand flat at both ends)"},
    // 1e6-panel midpoint of int_0^1 exp(-1/(t(1-t))) dt
    {"ext_beta_p(1,1,1)", 0.0070298584066096556, 0,
     "1e6-panel midpoint of int_0^1 exp(-1/(t(1-t))) dt"},
    // folded onto (0,1) by u -> 1/u, 1e6-panel midpoint
    {"int_0^inf exp(-u-1/u)", 0.27973176363305613, 0,
     "folded onto (0,1) by u -> 1/u, 1e6-panel midpoint"},
    // 1e6-panel midpoint of the p-extended Euler integral over B(1,2)
    {"ext_chf_p(1,3,2,1)", 0.018343847252216716, 0,
     "1e6-panel midpoint of the p-extended Euler integral over B(1,2)"},
    // 1e6-panel midpoint with the closed-form K_{3/2} kernel
    {"ext_beta_pnu(1.5,2.5,1,1)", 0.0020780143631250504, 0,
     "1e6-panel midpoint with the closed-form K_{3/2} kernel"},
    // B(3/2,5/2;1) + B(5/2,7/2;1), each a 1e6-panel midpoint (integer-order kernel expansion)
    {"ext_beta_pnu(1.5,2.5,1,1) by finite sum", 0.0020780143631250504, 0,
     "B(3/2,5/2;1) + B(5/2,7/2;1), each a 1e6-panel midpoint (integer-order kernel expansion)"},
    // series route, term tolerance 1e-16, every Beta term at rel_tol 1e-14
    {"ext_chf_pnu(1.5,3.2,2,0.7,1.3)", 0.13925414104003897, 0,
     "series route, term tolerance 1e-16, every Beta term at rel_tol 1e-14"},
    // series route, term tolerance 1e-16, every Beta term at rel_tol 1e-14
    {"ext_gauss_pnu(0.5,1,2.5,-0.3,1,0.5)", 0.007464632743939925, 0,
     "series route, term tolerance 1e-16, every Beta term at rel_tol 1e-14"},
    // unit-interval route at rel_tol 1e-14, level 14
    {"whittaker_ext(0.5,1,2;1,0.5)", 0.020645767630304075, 0,
     "unit-interval route at rel_tol 1e-14, level 14"},
    // 1e6-panel midpoint of the nu = 0 Euler integral (b = 1)
    {"whittaker_ext_nu0(0.25,0.75,1.5;0.5)", 0.11362003294846863, 0,
     "1e6-panel midpoint of the nu = 0 Euler integral (b = 1)"},
    // 1e6-panel midpoint with the closed-form K_{3/2} kernel
    {"kummer lhs (0.5,1,2;1,1)", 0.0083142641820347623, 0,
     "1e6-panel midpoint with the closed-form K_{3/2} kernel"},
    // 1e6-panel midpoint with the closed-form K_{3/2} kernel
    {"kummer rhs (0.5,1,2;1,1)", 0.0083142641820347606, 0,
     "1e6-panel midpoint with the closed-form K_{3/2} kernel"},
    // tgamma prefactors times a 1e6-panel midpoint for B(7/2,7/2) Phi(7/2;7;1)
    {"mellin_rhs(2;0,1,1;0)", 0.039676679534854292, 0,
     "tgamma prefactors times a 1e6-panel midpoint for B(7/2,7/2) Phi(7/2;7;1)"},
    // same composition as mellin_rhs(2;0,1,1;0)
    {"mellin_lhs(2;0,1,1;0)", 0.039676679534854292, 0,
     "same composition as mellin_rhs(2;0,1,1;0)"},
    // tgamma prefactor times a 1e6-panel midpoint of the p-extended Euler integral
    {"laplace_rhs(1,1;0,1;1,0)", 0.012405603840983413, 0,
     "tgamma prefactor times a 1e6-panel midpoint of the p-extended Euler integral"},
    // same composition as laplace_rhs(1,1;0,1;1,0)
    {"laplace_lhs(1,1;0,1;1,0)", 0.012405603840983413, 0,
     "same composition as laplace_rhs(1,1;0,1;1,0)"},
    // central difference, h = 1e-5, integral route at rel_tol 1e-14
    {"ext_chf_pnu_deriv n=1 (1.5,3.2,1;0.7,1.3)", 0.042280173842557112, 0,
     "central difference, h = 1e-5, integral route at rel_tol 1e-14"},
    // second central difference, h = 1e-3, integral route at rel_tol 1e-14
    {"ext_chf_pnu_deriv n=2 (1.5,3.2,1;0.7,1.3)", 0.023340545565742055, 0,
     "second central difference, h = 1e-3, integral route at rel_tol 1e-14"},
    // central difference of z^{-3/2} e^{z/2} M, h = 1e-5
    {"whittaker_diff n=1 (0,1,1;1,0.5)", 0.0080022388744896422, 0,
     "central difference of z^{-3/2} e^{z/2} M, h = 1e-5"},
    // second central difference of z^{-3/2} e^{z/2} M, h = 1e-3
    {"whittaker_diff n=2 (0,1,1;1,0.5)", 0.0044168488623486102, 0,
     "second central difference of z^{-3/2} e^{z/2} M, h = 1e-3"},
};

}  // namespace fixtures
