#pragma once

// Hand-entered fixtures and the blowup models used by the built-in scenarios.

#include "fano/profiles.hpp"

#include <string>
#include <vector>

namespace fixtures {

using fano::BlowupModel;
using fano::CurveCenter;
using fano::FourfoldProfile;
using fano::SurfaceCenter;

inline FourfoldProfile p4() { return FourfoldProfile::make("P4", 1, 5, 10, 1, 5); }
inline FourfoldProfile w22() { return FourfoldProfile::make("W22", 4, 3, 20, 1, 12); }
inline FourfoldProfile w5() { return FourfoldProfile::make("W5", 5, 3, 22, 1, 6); }
inline FourfoldProfile v14() { return FourfoldProfile::make("V14", 14, 2, 38, 1, 12); }

inline CurveCenter line() { return {0, 1}; }
inline SurfaceCenter linear_plane(const fano::Integer& c2xc) { return {1, -3, 9, 3, c2xc, true}; }
inline SurfaceCenter quintic_del_pezzo() { return {5, -5, 5, 7, 25, true}; }

struct NamedModel {
  std::string name;
  BlowupModel model;
};

inline std::vector<NamedModel> builtin_models() {
  return {
      {"P4/line", BlowupModel(p4(), line())},
      {"P4/plane", BlowupModel(p4(), linear_plane(10))},
      {"W22/line", BlowupModel(w22(), line())},
      {"W22/quintic", BlowupModel(w22(), quintic_del_pezzo())},
      {"W5/xi", BlowupModel(w5(), linear_plane(5))},
      {"W5/pi", BlowupModel(w5(), linear_plane(4))},
      {"V14/plane", BlowupModel(v14(), linear_plane(2))},
  };
}

}  // namespace fixtures
