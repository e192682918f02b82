#pragma once

#include <stdexcept>
#include <string>

namespace fs5 {

enum class Errc {
  ZeroParavector,
  NotImaginaryUnit,
  AxisSingularity,
  StencilOutOfDomain,
  AxisTooClose,
  SpectralSphereHit,
  OutsideConvergenceDisk,
  DegenerateRadius,
  PointOutsideDomain,
  EigensolverFailure,
  OnSpectrum,
  SingularSolve,
  SpectrumNotEnclosed,
  NotIntrinsic,
  NotCommuting,
  UnknownSuite,
  ConfigError,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroParavector: return "ZeroParavector";
    case Errc::NotImaginaryUnit: return "NotImaginaryUnit";
    case Errc::AxisSingularity: return "AxisSingularity";
    case Errc::StencilOutOfDomain: return "StencilOutOfDomain";
    case Errc::AxisTooClose: return "AxisTooClose";
    case Errc::SpectralSphereHit: return "SpectralSphereHit";
    case Errc::OutsideConvergenceDisk: return "OutsideConvergenceDisk";
    case Errc::DegenerateRadius: return "DegenerateRadius";
    case Errc::PointOutsideDomain: return "PointOutsideDomain";
    case Errc::EigensolverFailure: return "EigensolverFailure";
    case Errc::OnSpectrum: return "OnSpectrum";
    case Errc::SingularSolve: return "SingularSolve";
    case Errc::SpectrumNotEnclosed: return "SpectrumNotEnclosed";
    case Errc::NotIntrinsic: return "NotIntrinsic";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fs5
