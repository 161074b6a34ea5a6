#include "surface_census/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "surface_census/errors.hpp"

namespace surface_census {

std::string double_to_string(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  if (ec != std::errc())
    throw std::runtime_error("double_to_string: conversion failed");
  return std::string(buffer, ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace {

std::string cycle_type_key(const CycleType& type) {
  std::string key;
  for (std::size_t i = 0; i < type.parts.size(); ++i) {
    if (i > 0) key += '+';
    key += std::to_string(type.parts[i]);
  }
  return key;
}

Json probs_to_json(const std::map<int, Rational>& probs) {
  Json out = Json::object();
  for (const auto& [t, p] : probs) out[std::to_string(t)] = rational_to_string(p);
  return out;
}

const char* moment_label(int order) {
  switch (order) {
    case 1:
      return "mean";
    case 2:
      return "central2";
    case 3:
      return "central3";
    default:
      return "central4";
  }
}

}  // namespace

Json to_json(const CycleDistribution& dist, std::optional<int> k) {
  Json out = Json::object();
  out["n"] = dist.n;
  if (k) out["k"] = *k;
  out["probs"] = probs_to_json(dist.probs);
  return out;
}

Json to_json(const ClassDistribution& dist) {
  Json out = Json::object();
  out["n"] = dist.n;
  Json probs = Json::object();
  for (const auto& [type, p] : dist.probs)
    probs[cycle_type_key(type)] = rational_to_string(p);
  out["probs"] = probs;
  return out;
}

Json to_json(const MomentSet& moments) {
  Json out = Json::object();
  out["order"] = moments.order;
  auto list = [](const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& value : values) arr.push_back(rational_to_string(value));
    return arr;
  };
  out["factorial"] = list(moments.factorial);
  out["raw"] = list(moments.raw);
  out["central"] = list(moments.central);
  return out;
}

Json to_json(const AsymptoticMoments& asymptotics) {
  Json out = Json::object();
  out["n"] = asymptotics.n;
  Json entries = Json::array();
  for (std::size_t i = 0; i < asymptotics.entries.size(); ++i) {
    const AsymptoticMoment& entry = asymptotics.entries[i];
    Json item = Json::object();
    item["moment"] = moment_label(static_cast<int>(i) + 1);
    item["value"] = entry.value;
    item["error_scale"] = entry.error_scale;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const MomentReport& report) {
  Json out = Json::object();
  out["samples"] = report.samples;
  out["mean"] = report.mean;
  out["central2"] = report.central2;
  out["central3"] = report.central3;
  out["central4"] = report.central4;
  out["standard_error_mean"] = report.standard_error_mean;
  out["exact_reference"] =
      report.exact_reference ? to_json(*report.exact_reference) : Json(nullptr);
  out["asymptotic_reference"] = to_json(report.asymptotic_reference);
  return out;
}

Json to_json(const TailReport& report) {
  Json out = Json::object();
  out["thresholds"] = report.thresholds;
  Json empirical = Json::object();
  for (const auto& [t, freq] : report.empirical)
    empirical[std::to_string(t)] = freq;
  out["empirical"] = std::move(empirical);
  Json bound = Json::object();
  for (const auto& [t, value] : report.bound)
    bound[std::to_string(t)] = rational_to_string(value);
  out["bound"] = std::move(bound);
  return out;
}

SurfaceSummary summarize_surfaces(const SurfaceParams& params,
                                  const std::map<int, std::uint64_t>& histogram) {
  SurfaceSummary summary;
  double total = 0.0;
  double vertex_sum = 0.0;
  double chi_sum = 0.0;
  for (const auto& [vertices, count] : histogram) {
    if (vertices < 1)
      throw InvalidParams("summarize_surfaces: vertex count must be positive");
    const int chi = vertices - params.edges_after + params.faces;
    if (chi % 2 != 0)
      throw InconsistentInvariants(
          "vertex count " + std::to_string(vertices) + " gives odd chi = " +
          std::to_string(chi) + ", impossible for any orientable glueing");
    const auto weight = static_cast<double>(count);
    total += weight;
    vertex_sum += weight * vertices;
    chi_sum += weight * chi;
    if (chi > 2) {
      summary.disconnected += count;
    } else {
      summary.genus_histogram[(2 - chi) / 2] += count;
    }
  }
  if (total > 0.0) {
    summary.mean_vertices = vertex_sum / total;
    summary.mean_euler_characteristic = chi_sum / total;
  }
  return summary;
}

Json to_json(const SurfaceSummary& summary) {
  Json out = Json::object();
  out["mean_vertices"] = summary.mean_vertices;
  out["mean_euler_characteristic"] = summary.mean_euler_characteristic;
  Json genus = Json::object();
  for (const auto& [g, count] : summary.genus_histogram)
    genus[std::to_string(g)] = count;
  out["genus_histogram"] = std::move(genus);
  out["disconnected"] = summary.disconnected;
  return out;
}

Json sample_report_json(const RunConfig& config, const McResult& result,
                        const SurfaceParams& params) {
  Json out = Json::object();
  out["command"] = "sample";
  Json cfg = Json::object();
  cfg["n"] = config.n;
  cfg["k"] = config.k;
  cfg["samples"] = config.samples;
  cfg["seed"] = config.seed;
  cfg["threads"] = config.threads;
  cfg["gamburd_regime"] = params.gamburd_regime;
  out["params"] = std::move(cfg);
  out["moments"] = to_json(result.moments);
  out["tails"] = to_json(result.tails);
  Json histogram = Json::object();
  for (const auto& [cycles, count] : result.histogram)
    histogram[std::to_string(cycles)] = count;
  out["histogram"] = std::move(histogram);
  out["surface"] = to_json(summarize_surfaces(params, result.histogram));
  return out;
}

std::string sample_report_csv(const RunConfig& config, const McResult& result,
                              const SurfaceParams& params) {
  std::string out = "section,key,value\n";
  auto row = [&out](const std::string& section, const std::string& key,
                    const std::string& value) {
    out += csv_field(section);
    out += ',';
    out += csv_field(key);
    out += ',';
    out += csv_field(value);
    out += '\n';
  };

  row("params", "n", std::to_string(config.n));
  row("params", "k", std::to_string(config.k));
  row("params", "samples", std::to_string(config.samples));
  row("params", "seed", std::to_string(config.seed));
  row("params", "threads", std::to_string(config.threads));
  row("params", "gamburd_regime", params.gamburd_regime ? "true" : "false");

  const MomentReport& m = result.moments;
  row("moments", "samples", std::to_string(m.samples));
  row("moments", "mean", double_to_string(m.mean));
  row("moments", "central2", double_to_string(m.central2));
  row("moments", "central3", double_to_string(m.central3));
  row("moments", "central4", double_to_string(m.central4));
  row("moments", "standard_error_mean", double_to_string(m.standard_error_mean));
  if (m.exact_reference) {
    const MomentSet& exact = *m.exact_reference;
    for (int order = 1; order <= exact.order; ++order) {
      row("exact_reference", "factorial" + std::to_string(order),
          rational_to_string(exact.factorial[order - 1]));
      row("exact_reference", "raw" + std::to_string(order),
          rational_to_string(exact.raw[order - 1]));
      row("exact_reference", "central" + std::to_string(order),
          rational_to_string(exact.central[order - 1]));
    }
  }
  for (std::size_t i = 0; i < m.asymptotic_reference.entries.size(); ++i) {
    row("asymptotic_reference", moment_label(static_cast<int>(i) + 1),
        double_to_string(m.asymptotic_reference.entries[i].value));
  }

  for (const auto& [t, freq] : result.tails.empirical)
    row("tails_empirical", std::to_string(t), double_to_string(freq));
  for (const auto& [t, value] : result.tails.bound)
    row("tails_bound", std::to_string(t), rational_to_string(value));

  for (const auto& [cycles, count] : result.histogram)
    row("histogram", std::to_string(cycles), std::to_string(count));

  const SurfaceSummary summary = summarize_surfaces(params, result.histogram);
  row("surface", "mean_vertices", double_to_string(summary.mean_vertices));
  row("surface", "mean_euler_characteristic",
      double_to_string(summary.mean_euler_characteristic));
  for (const auto& [genus, count] : summary.genus_histogram)
    row("surface", "genus" + std::to_string(genus), std::to_string(count));
  row("surface", "disconnected", std::to_string(summary.disconnected));
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) throw std::runtime_error("failed while writing " + path);
}

}  // namespace surface_census
