#include "courteous/theatre.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "courteous/exact.hpp"
#include "courteous/rng.hpp"

namespace courteous {

int TheatreLayout::total_seats() const {
  int total = 0;
  for (const auto& row : rows) {
    for (const auto& section : row) total += section.seats;
  }
  return total;
}

void TheatreLayout::validate() const {
  if (rows.empty()) {
    throw std::invalid_argument("TheatreLayout: needs at least one row");
  }
  for (const auto& row : rows) {
    for (const auto& section : row) {
      if (section.seats < 1) {
        throw std::invalid_argument("TheatreLayout: every section needs >= 1 seat");
      }
    }
  }
}

TheatreLayout lipari_layout(int seats_per_section) {
  if (seats_per_section < 1) {
    throw std::invalid_argument("lipari_layout: seats_per_section must be >= 1");
  }
  const std::vector<Section> row = {
      {seats_per_section, Entrances::OneLeft}, {seats_per_section, Entrances::Two},
      {seats_per_section, Entrances::Two},     {seats_per_section, Entrances::Two},
      {seats_per_section, Entrances::OneLeft},
  };
  TheatreLayout layout;
  layout.rows.assign(12, row);
  return layout;
}

double expected_theatre(const TheatreLayout& layout, double p, SeatDistribution distribution) {
  layout.validate();
  std::map<std::pair<int, Entrances>, double> memo;
  double total = 0.0;
  for (const auto& row : layout.rows) {
    for (const auto& section : row) {
      const auto key = std::make_pair(section.seats, section.entrances);
      auto it = memo.find(key);
      if (it == memo.end()) {
        const RowSpec spec{section.seats, section.entrances, distribution, p};
        it = memo.emplace(key, exact_table(spec).value(section.seats)).first;
      }
      total += it->second;
    }
  }
  return total;
}

std::vector<double> theatre_trial_values(const TheatreLayout& layout, double p,
                                         SeatDistribution distribution, std::uint64_t trials,
                                         std::uint64_t seed) {
  layout.validate();
  if (trials == 0) {
    throw std::invalid_argument("simulate_theatre: needs trials >= 1");
  }
  RowSpec probe{1, Entrances::OneLeft, distribution, p};
  probe.validate();
  detail::CdfCache cache(distribution);
  std::vector<double> values;
  values.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SplitMix64 rng = trial_stream(seed, i);
    std::uint64_t seated = 0;
    for (const auto& row : layout.rows) {
      for (const auto& section : row) {
        const RowSpec spec{section.seats, section.entrances, distribution, p};
        seated += detail::run_model_row(spec, cache, rng);
      }
    }
    values.push_back(static_cast<double>(seated));
  }
  return values;
}

SimulationSummary simulate_theatre(const TheatreLayout& layout, double p,
                                   SeatDistribution distribution, std::uint64_t trials,
                                   std::uint64_t seed) {
  const std::vector<double> values = theatre_trial_values(layout, p, distribution, trials, seed);
  SimulationSummary summary;
  summary.spec = RowSpec{layout.total_seats(), Entrances::OneLeft, distribution, p};
  summary.semantics = Semantics::Model;
  summary.trials = trials;
  summary.seed = seed;
  if (values.size() >= 2) {
    summary.stats = summarize(values);
  } else {
    summary.stats.count = 1;
    summary.stats.mean = values.front();
    summary.stats.ci95_low = summary.stats.ci95_high = values.front();
  }
  return summary;
}

TheatreLayout layout_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("layout JSON is malformed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw std::invalid_argument("layout JSON must be an object with a \"rows\" array");
  }
  TheatreLayout layout;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) {
      throw std::invalid_argument("layout JSON: every row must be an array of sections");
    }
    std::vector<Section> sections;
    for (const auto& s : row) {
      if (!s.is_object() || !s.contains("seats") || !s.contains("entrances")) {
        throw std::invalid_argument(
            "layout JSON: sections need integer \"seats\" and \"entrances\" fields");
      }
      Section section;
      section.seats = s["seats"].get<int>();
      const int entrances = s["entrances"].get<int>();
      if (entrances != 1 && entrances != 2) {
        throw std::invalid_argument("layout JSON: \"entrances\" must be 1 or 2");
      }
      section.entrances = entrances == 1 ? Entrances::OneLeft : Entrances::Two;
      sections.push_back(section);
    }
    layout.rows.push_back(std::move(sections));
  }
  layout.validate();
  return layout;
}

std::string layout_to_json(const TheatreLayout& layout) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : layout.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& section : row) {
      jrow.push_back({{"seats", section.seats},
                      {"entrances", section.entrances == Entrances::OneLeft ? 1 : 2}});
    }
    rows.push_back(std::move(jrow));
  }
  return nlohmann::json{{"rows", std::move(rows)}}.dump();
}

}  // namespace courteous
