#pragma once

#include "hdiv/mpoly.hpp"

namespace hdiv {

// Classical un-normalized Legendre polynomial, ell_n(1) = 1. One variable.
MPoly legendre(int n);

// Integrated Legendre L_n(x) = integral_{-1}^{x} ell_{n-1}; L_n(+-1) = 0. n >= 2.
MPoly integrated_legendre(int n);

// Homogeneous bivariate (x,t) version: L^s_n(x,t) = t^n L_n(x/t). n >= 2.
MPoly scaled_integrated_legendre(int n);

// Classical un-normalized Jacobi P_n^{(alpha,beta)}, P_n(1) = binom(n+alpha,n).
MPoly jacobi(int n, int alpha, int beta);

// Homogeneous bivariate (a,b) version: HP_n(a,b) = b^n P_n^{(alpha,beta)}(2a/b - 1).
MPoly homogenized_jacobi(int n, int alpha, int beta);

// homogenized_jacobi with (a,b) replaced by polynomials (division-free composition).
MPoly homogenized_jacobi_at(int n, int alpha, int beta, const MPoly& a, const MPoly& b);

// scaled_integrated_legendre with (x,t) replaced by polynomials.
MPoly scaled_integrated_legendre_at(int n, const MPoly& x, const MPoly& t);

// univariate p evaluated at polynomial argument.
MPoly compose1(const MPoly& p, const MPoly& arg);

}  // namespace hdiv
