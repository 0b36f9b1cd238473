#ifndef MPC_ERRORS_HPP
#define MPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NonSymplectic : Error { using Error::Error; };
struct NotComplexLinear : Error { using Error::Error; };
struct NotInGLPlus : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct NotPseudoUnitary : Error { using Error::Error; };
struct EigenspaceMismatch : Error { using Error::Error; };
struct NotStabilizing : Error { using Error::Error; };
struct NonSymmetricS : Error { using Error::Error; };
struct DimensionOutOfRange : Error { using Error::Error; };
struct NotInSp : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct DimensionOverflow : Error { using Error::Error; };
struct IncompleteBlocks : Error { using Error::Error; };
struct OracleMismatch : Error { using Error::Error; };
struct RankAmbiguous : Error { using Error::Error; };

} // namespace mpc

#endif
