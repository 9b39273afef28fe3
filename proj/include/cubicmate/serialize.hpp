#pragma once

#include <json.hpp>

#include "cubicmate/limb.hpp"
#include "cubicmate/mating_graph.hpp"
#include "cubicmate/rotation_set.hpp"

namespace cubicmate {

nlohmann::json to_json(const Angle &a);
nlohmann::json to_json(const std::vector<Angle> &angles);
nlohmann::json to_json(const Arc &arc);
nlohmann::json to_json(const RotationSet &X);
nlohmann::json to_json(const LimbId &limb);
nlohmann::json to_json(const LimbDataResult &data);
nlohmann::json to_json(const ThetaSet &theta);
nlohmann::json to_json(const PreperiodicLimbRays &rays);
nlohmann::json to_json(const RayClassGraph &g);
nlohmann::json to_json(const Verdict &v);
nlohmann::json to_json(const MatingReport &report);

}  // namespace cubicmate
