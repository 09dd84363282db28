#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "courteous/row.hpp"
#include "courteous/simulate.hpp"

namespace courteous {

// A maximal run of seats between aisles or walls, reachable through one or
// two entrances.
struct Section {
  int seats = 1;
  Entrances entrances = Entrances::OneLeft;
};

struct TheatreLayout {
  std::vector<std::vector<Section>> rows;

  int total_seats() const;
  void validate() const;  // at least one row; every section has >= 1 seat
};

// Twelve rows of five sections: wall-bounded single-entrance sections at both
// ends and three aisle-to-aisle two-entrance sections in between, each with
// seats_per_section seats.
TheatreLayout lipari_layout(int seats_per_section);

// Sum of exact per-section expectations; sections fill independently to
// saturation. Throws for section/distribution combinations without an exact
// engine (two entrances with a non-uniform law).
double expected_theatre(const TheatreLayout& layout, double p, SeatDistribution distribution);

// Seeded model-semantics simulation. Per trial, sections fill independently
// in row-major order from one trial stream, so a single-section layout
// reproduces simulate_model bit for bit. The summary's RowSpec aggregates:
// seats = total seats; its entrances field is not meaningful for a layout.
SimulationSummary simulate_theatre(const TheatreLayout& layout, double p,
                                   SeatDistribution distribution, std::uint64_t trials,
                                   std::uint64_t seed);
std::vector<double> theatre_trial_values(const TheatreLayout& layout, double p,
                                         SeatDistribution distribution, std::uint64_t trials,
                                         std::uint64_t seed);

// JSON schema: {"rows": [[{"seats": N, "entrances": 1|2}, ...], ...]}
TheatreLayout layout_from_json(const std::string& text);
std::string layout_to_json(const TheatreLayout& layout);

}  // namespace courteous
