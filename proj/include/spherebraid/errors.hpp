#pragma once

#include <stdexcept>
#include <string>

namespace spherebraid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two input points coincide within kEpsPoint, so a cross-ratio (or another
// configuration-space quantity) is undefined.
struct DegenerateConfiguration : Error {
  using Error::Error;
};

// The two endpoints of a requested minimal geodesic are antipodal.
struct AntipodalPair : Error {
  using Error::Error;
};

// The sampled input lies in the negligible set Z (or Z') excluded by the
// short-path construction; callers resample.
struct NegligibleSetHit : Error {
  using Error::Error;
};

// A traced trajectory tuple violated the minimum separation; the flow
// integration step was too coarse for this configuration.
struct DiagonalCrossing : Error {
  using Error::Error;
};

// Two planar strands came within kEpsPlanar in cross-ratio coordinates.
struct NumericalDiagonal : Error {
  using Error::Error;
};

// The chosen projection direction has a tangency or a triple alignment.
struct NonGenericDirection : Error {
  using Error::Error;
};

struct DirectionSearchExhausted : Error {
  using Error::Error;
};

struct IntegrationBlowup : Error {
  using Error::Error;
};

struct SamplerStuck : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct SingularPoint : Error {
  using Error::Error;
};

struct NotPure : Error {
  using Error::Error;
};

struct NonStabilized : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

}  // namespace spherebraid
