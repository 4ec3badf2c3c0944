#pragma once

#include "geocurv/geometry.hpp"

namespace geocurv {

/// Kulkarni-Nomizu product of two (0,2) tensors, signed as
/// (A ^ E)(Y1,Y2,U1,U2) = A(Y1,U2)E(Y2,U1) - A(Y1,U1)E(Y2,U2)
///                      + A(Y2,U1)E(Y1,U2) - A(Y2,U2)E(Y1,U1).
TensorField kulkarni_nomizu(const TensorField& a, const TensorField& e);

/// Endomorphism view of a (0,4) curvature-type tensor:
/// (Ecal(U1,U2) Y)^a = g^{ah} E(U1,U2,Y,h), the pairing
/// E(U1,U2,U3,U4) = g(Ecal(U1,U2)U3, U4).
/// Stored as raised[a][y][u1][u2].
std::vector<Expr> raise_endomorphism(const TensorField& e, const MetricSpec& metric);

/// Derivation action (E . F)(Y1..Yk,U1,U2) = -sum_m F(.., Ecal(U1,U2)Y_m, ..);
/// the two endomorphism slots are stored last.
TensorField dot_action(const TensorField& e, const TensorField& f,
                       const MetricSpec& metric);

/// Tachibana tensor Q(Z,F)(Y1..Yk,U1,U2) = ((U1 wedge_Z U2) . F)(Y1..Yk)
///  = sum_m Z(U1,Y_m) F(..U2 at m..) - sum_m Z(U2,Y_m) F(..U1 at m..).
TensorField tachibana(const TensorField& z, const TensorField& f);

struct ValenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geocurv
