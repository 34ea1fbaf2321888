#pragma once

#include "hopfchain/absorption.hpp"
#include "hopfchain/chain.hpp"
#include "hopfchain/spectral.hpp"

#include <json.hpp>

#include <string>

namespace hopfchain {

std::string library_version();

std::string matrix_csv(const HopfInstance& h, const TransitionMatrix& k);
nlohmann::ordered_json matrix_json(const HopfInstance& h, const TransitionMatrix& k);
std::string eigen_csv(const HopfInstance& h, const EigenSystem& sys, Side side);
nlohmann::ordered_json eigen_json(const HopfInstance& h, const EigenSystem& sys, bool certificate);
std::string trajectory_text(const HopfInstance& h, const std::vector<Element>& path);
nlohmann::ordered_json quasisym_json(const QuasisymFunction& chi);

}  // namespace hopfchain
