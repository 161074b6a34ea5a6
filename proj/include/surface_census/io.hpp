#ifndef SURFACE_CENSUS_IO_HPP
#define SURFACE_CENSUS_IO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "surface_census/enumerate.hpp"
#include "surface_census/montecarlo.hpp"
#include "surface_census/surface.hpp"

namespace surface_census {

// Key order is fixed so equal inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double.
std::string double_to_string(double v);

// RFC 4180: quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

Json to_json(const CycleDistribution& dist, std::optional<int> k = std::nullopt);
Json to_json(const ClassDistribution& dist);
Json to_json(const MomentSet& moments);
Json to_json(const AsymptoticMoments& asymptotics);
Json to_json(const MomentReport& report);
Json to_json(const TailReport& report);

struct SurfaceSummary {
  double mean_vertices = 0.0;
  double mean_euler_characteristic = 0.0;  // global chi, defined either way
  // Keyed by (2 - chi)/2; covers only draws with chi <= 2, where a single
  // genus is meaningful.
  std::map<int, std::uint64_t> genus_histogram;
  // Draws with chi > 2: the glueing split into several surfaces.
  std::uint64_t disconnected = 0;
};

// Aggregates a cycle-count histogram into surface invariants. chi > 2 draws
// are counted as disconnected rather than given a genus; an odd chi (a
// parity violation no glueing can produce) throws InconsistentInvariants.
SurfaceSummary summarize_surfaces(const SurfaceParams& params,
                                  const std::map<int, std::uint64_t>& histogram);

Json to_json(const SurfaceSummary& summary);

// The full `sample` report; the CLI writes exactly these bytes, which is
// what makes byte-identical reruns testable.
Json sample_report_json(const RunConfig& config, const McResult& result,
                        const SurfaceParams& params);
std::string sample_report_csv(const RunConfig& config, const McResult& result,
                              const SurfaceParams& params);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace surface_census

#endif
