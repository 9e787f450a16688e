#include "presets.hpp"

#include <string>

namespace casimir_cli {

namespace {

PlateSpec graphene() { return {CASIMIR_PLATE_CONDUCTIVITY, casimir_graphene_sigma(), 0.0, false}; }
PlateSpec swept() { return {CASIMIR_PLATE_CONDUCTIVITY, 0.0, 0.0, true}; }
PlateSpec pe() { return {CASIMIR_PLATE_PERFECT_ELECTRIC, 0.0, 0.0, false}; }
PlateSpec pm() { return {CASIMIR_PLATE_PERFECT_MAGNETIC, 0.0, 0.0, false}; }

RunConfig stack(std::string name, std::vector<PlateSpec> plates,
                casimir_method method = CASIMIR_METHOD_AUTO) {
  RunConfig c;
  c.name = std::move(name);
  c.plates = std::move(plates);
  c.method = method;
  return c;
}

RunConfig swept_stack(std::string name, std::vector<PlateSpec> plates, SweepSpec grid) {
  RunConfig c = stack(std::move(name), std::move(plates));
  c.sweep = grid;
  return c;
}

constexpr SweepSpec kFig2Grid{0.005, 1000.0, 41, SweepScale::Log};
constexpr SweepSpec kPermeableGrid{0.01, 1000.0, 41, SweepScale::Log};

// Permeable plate at the edge (position 1) or inside the stack (position 2),
// every other plate a swept conductivity plate.
RunConfig permeable_stack(int figure, int plates, bool edge) {
  std::vector<PlateSpec> p(static_cast<std::size_t>(plates), swept());
  p[edge ? 0 : 1] = pm();
  return swept_stack("fig" + std::to_string(figure) + (edge ? "-edge" : "-middle"), std::move(p),
                     kPermeableGrid);
}

std::vector<RunConfig> ideal_asymptotes() {
  std::vector<RunConfig> out;
  for (int n = 2; n <= 6; ++n)
    out.push_back(stack("pe-stack-" + std::to_string(n), std::vector<PlateSpec>(static_cast<std::size_t>(n), pe()),
                        CASIMIR_METHOD_IDEAL));
  for (int n = 2; n <= 6; ++n) {
    std::vector<PlateSpec> p;
    for (int i = 0; i < n; ++i) p.push_back(i % 2 == 0 ? pe() : pm());
    out.push_back(stack("alternating-" + std::to_string(n), std::move(p), CASIMIR_METHOD_IDEAL));
  }
  out.push_back(stack("pm-edge-4", {pm(), pe(), pe(), pe()}, CASIMIR_METHOD_IDEAL));
  out.push_back(stack("pm-middle-4", {pe(), pm(), pe(), pe()}, CASIMIR_METHOD_IDEAL));
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names{"graphene-pair"};
  for (int n = 2; n <= 6; ++n) names.push_back("graphene-stack-" + std::to_string(n));
  for (const char* n : {"boyer-pair", "pe-graphene", "pm-graphene", "fig2"}) names.emplace_back(n);
  for (int f = 3; f <= 6; ++f) {
    names.push_back("fig" + std::to_string(f) + "-edge");
    names.push_back("fig" + std::to_string(f) + "-middle");
  }
  names.emplace_back("ideal-asymptotes");
  return names;
}

std::optional<std::vector<RunConfig>> preset(std::string_view name) {
  if (name == "graphene-pair") return std::vector{stack("graphene-pair", {graphene(), graphene()})};
  if (name.starts_with("graphene-stack-") && name.size() == 16) {
    const int n = name.back() - '0';
    if (n < 2 || n > 6) return std::nullopt;
    return std::vector{stack(std::string(name), std::vector<PlateSpec>(static_cast<std::size_t>(n), graphene()))};
  }
  if (name == "boyer-pair") return std::vector{stack("boyer-pair", {pe(), pm()})};
  if (name == "pe-graphene") return std::vector{stack("pe-graphene", {pe(), graphene()})};
  if (name == "pm-graphene") return std::vector{stack("pm-graphene", {pm(), graphene()})};
  if (name == "fig2") {
    std::vector<RunConfig> out;
    for (int n = 2; n <= 6; ++n)
      out.push_back(swept_stack("fig2-N" + std::to_string(n),
                                std::vector<PlateSpec>(static_cast<std::size_t>(n), swept()), kFig2Grid));
    return out;
  }
  for (int f = 3; f <= 6; ++f) {
    const std::string base = "fig" + std::to_string(f);
    if (name == base + "-edge") return std::vector{permeable_stack(f, f, true)};
    if (name == base + "-middle") return std::vector{permeable_stack(f, f, false)};
  }
  if (name == "ideal-asymptotes") return ideal_asymptotes();
  return std::nullopt;
}

}  // namespace casimir_cli
