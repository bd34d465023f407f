#pragma once

#include "fjf/formal.hpp"

namespace fjf {

/// Index raising V_ell: J_{k,m} -> J_{k, m*ell}.
/// c(n, r; phi|V_ell) = sum_{a | gcd(n,r,ell)} a^{k-1} c(n*ell/a^2, r/a; phi),
/// with gcd(0, x) = |x| and gcd(0,0,ell) = ell.
/// outPrec <= floor((prec(phi)-1)/ell) + 1; pass 0 for the maximum.
JacobiFormQExp applyV(const JacobiFormQExp& phi, long ell, long outPrec = 0);

/// Index raising U_ell (substitution z -> ell*z): J_{k,m} -> J_{k, m*ell^2}.
JacobiFormQExp applyU(const JacobiFormQExp& phi, long ell);

/// Gritsenko Fourier-Jacobi series of phi in J_{k,N} at depth d:
/// part 0 = c(0,0;phi) * (-B_k / 2k) * E_k, part m = phi|V_m.
/// outPrec 0 selects the largest precision the input supports.
TruncatedFormalSeries gritsenkoFJ(const JacobiFormQExp& phi, long d, long outPrec = 0);

enum class RaiseVariant { Eta, Theta, ThetaPrime };

/// Level raising on a cuspidal series (part 0 must vanish):
///   Eta:        level N*ell^2, part j = phi_j | U_ell
///   Theta:      level N*ell,   part j = phi_j | V_ell
///   ThetaPrime: level N*ell,   part j = sum_{delta | gcd(ell,j)}
///               delta^{k-1} phi_{ell*j/delta^2} | U_delta
TruncatedFormalSeries levelRaise(const TruncatedFormalSeries& f, long ell, RaiseVariant variant);

enum class CompatResult { Pass, Fail, PreconditionViolated };

/// Coefficientwise check of the level-raising compatibility: the Fricke
/// image of the Theta raise must equal eps times the ThetaPrime raise on
/// the common window.  Requires f to satisfy the involution condition for
/// eps beforehand.
CompatResult thetaCompatibilityCheck(const TruncatedFormalSeries& f, long ell, int eps);

}  // namespace fjf
