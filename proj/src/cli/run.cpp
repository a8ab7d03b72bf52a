// Copyright 2026 The oamic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oamic/cli/run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "oamic/channels.hpp"
#include "oamic/cli/analysis.hpp"
#include "oamic/codes.hpp"
#include "oamic/invariants.hpp"
#include "oamic/retrieval.hpp"
#include "oamic/turbulence.hpp"

namespace oamic::cli {

namespace {

constexpr const char* kToolName = "oamic";
constexpr const char* kToolVersion = "1.0.0";

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string state_csv(const DensityMatrix& rho) {
  std::ostringstream os;
  os << "row_mode,col_mode,re,im\n";
  for (Index i = 0; i < rho.dim(); ++i) {
    for (Index j = 0; j < rho.dim(); ++j) {
      os << rho.basis()[i] << ',' << rho.basis()[j] << ',' << number(rho(i, j).real()) << ','
         << number(rho(i, j).imag()) << '\n';
    }
  }
  return os.str();
}

SpilloverSpec read_spec(ConfigReader& r) {
  return SpilloverSpec{r.get<std::vector<double>>("probs")};
}

/// A state given either as {"state": density} or {"amplitudes": [...]}.
DensityMatrix read_state(ConfigReader& r, const ModeBasis& default_basis) {
  const bool has_state = r.has("state");
  const bool has_amps = r.has("amplitudes");
  if (has_state == has_amps) throw ConfigError("give exactly one of 'state' or 'amplitudes'");
  if (has_state) return density_from_json(r.require("state"), default_basis);
  return pure_density(vector_from_json(r.require("amplitudes")), default_basis);
}

Json family_one_table(const DensityMatrix& before, const DensityMatrix& after) {
  Json rows = Json::array();
  for (Index m = 1; m < after.dim(); ++m) {
    rows.push_back({{"m", m},
                    {"input", to_json(family_one(before, m).value)},
                    {"output", to_json(family_one(after, m).value)}});
  }
  return rows;
}

ScenarioOutput ic_sim(ConfigReader& r) {
  const int l_min = r.get<int>("l_min");
  const int l_max = r.get<int>("l_max");
  const SpilloverSpec spec = read_spec(r);
  if (l_max < l_min) throw ConfigError("l_max must not be below l_min");
  const DensityMatrix rho = read_state(r, ModeBasis::range(l_min, l_max));
  r.finish();

  const KrausChannel channel = build_ic_channel(l_min, l_max, spec);
  const DensityMatrix out = apply_channel(channel, rho);
  Json results = {{"channel",
                   {{"input_modes", channel.input_support.labels()},
                    {"output_modes", channel.output_basis.labels()},
                    {"shifts", channel.shifts},
                    {"completeness_defect", channel.completeness_defect()}}},
                  {"input_state", to_json(rho)},
                  {"output_state", to_json(out)}};
  return {std::move(results), state_csv(out)};
}

ScenarioOutput flip_sim(ConfigReader& r) {
  const Index dim = r.get<Index>("dim");
  const SpilloverSpec spec = read_spec(r);
  if (dim < 2) throw Error(ErrorKind::InvalidDimension, "flip channel needs dim >= 2");
  const DensityMatrix rho = read_state(r, ModeBasis::indices(dim));
  r.finish();
  if (!(rho.basis() == ModeBasis::indices(dim))) {
    throw Error(ErrorKind::ShapeError, "flip-channel states use the index basis 0..dim-1");
  }

  const KrausChannel channel = build_flip_channel(dim, spec);
  const DensityMatrix out = apply_channel(channel, rho);
  Json results = {{"channel",
                   {{"dim", dim},
                    {"shifts", channel.shifts},
                    {"completeness_defect", channel.completeness_defect()}}},
                  {"input_state", to_json(rho)},
                  {"output_state", to_json(out)},
                  {"family_one", family_one_table(rho, out)}};
  return {std::move(results), state_csv(out)};
}

Json invariant_list(const std::vector<InvariantValue>& values) {
  Json list = Json::array();
  for (const auto& v : values) list.push_back(to_json(v));
  return list;
}

ScenarioOutput werner(ConfigReader& r) {
  turbulence::WernerParams p;
  p.gamma_purity = r.get<double>("gamma");
  p.theta = r.get<double>("theta");
  p.phi = r.get<double>("phi");
  p.mu = r.get<double>("mu");
  p.nu = r.get<double>("nu");
  r.finish();

  const DensityMatrix in = turbulence::werner_initial(p);
  const DensityMatrix out = turbulence::werner_output(p);
  const auto ratios = werner_ratio_invariants(out);
  Json results = {
      {"input_state", to_json(in)},
      {"output_state", to_json(out)},
      {"ratio_invariants", invariant_list({ratios.begin(), ratios.end()})},
      {"tan_phase_invariant", to_json(tan_phase_invariant(out, 1, 2))},
      {"recovered_phi", recover_werner_phi(out)}};
  return {std::move(results), state_csv(out)};
}

ScenarioOutput two_qubit(ConfigReader& r) {
  turbulence::TwoQubitParams p;
  p.a = r.get<double>("a");
  p.b = r.get<double>("b");
  p.gamma_phase = r.get<double>("gamma");
  r.finish();

  const DensityMatrix out = turbulence::two_qubit_output(p);
  Json results = {{"output_state", to_json(out)},
                  {"tan_phase_invariant", to_json(tan_phase_invariant(out, 1, 2))},
                  {"recovered_gamma", recover_two_qubit_gamma(out)}};
  return {std::move(results), state_csv(out)};
}

ScenarioOutput three_qubit(ConfigReader& r) {
  turbulence::ThreeQubitParams p;
  const ComplexVector alphas = vector_from_json(r.require("alphas"));
  if (alphas.size() != 5) throw ConfigError("alphas must hold five amplitudes");
  for (Index k = 0; k < 5; ++k) p.alphas[std::size_t(k)] = alphas(k);
  p.a = r.get<double>("a");
  p.b = r.get<double>("b");
  const int ell = r.get_or<int>("ell", 1);
  r.finish();

  const DensityMatrix in = turbulence::three_qubit_initial(p);
  const DensityMatrix out = turbulence::three_qubit_output(p);
  Json recovered = Json::array();
  for (const Complex& a : recover_three_qubit_params(out)) recovered.push_back(to_json(a));

  Json out_json = to_json(out);
  out_json["product_modes"] = turbulence::product_modes(ell, 3);
  Json in_json = to_json(in);
  in_json["product_modes"] = out_json["product_modes"];
  Json results = {{"input_state", std::move(in_json)},
                  {"output_state", std::move(out_json)},
                  {"invariants", invariant_list(three_qubit_invariants(out))},
                  {"retrieval_invariants", invariant_list(three_qubit_retrieval_invariants(out))},
                  {"recovered_alphas", std::move(recovered)}};
  return {std::move(results), state_csv(out)};
}

Json solve_table(const std::vector<SolveReport>& solves) {
  Json rows = Json::array();
  for (const auto& s : solves) {
    rows.push_back({{"superdiagonal", s.superdiagonal},
                    {"condition_number", s.condition_number},
                    {"residuals", s.residuals}});
  }
  return rows;
}

// Either simulates an initial state through the crosstalk channel and
// retrieves it, or retrieves from a supplied output state.
ScenarioOutput retrieve(ConfigReader& r) {
  RetrievalOptions opts;
  opts.corner_floor = r.get_or<double>("corner_floor", opts.corner_floor);

  Json results;
  std::optional<RetrievalProblem> problem;
  if (r.has("output_state")) {
    const Index modes = r.get<Index>("modes");
    const Index spill = r.get<Index>("spill");
    const Index offset = r.get_or<Index>("offset", spill);
    const Json& state = r.require("output_state");
    r.finish();
    if (modes < 2 || spill < 0) throw Error(ErrorKind::InvalidDimension, "need modes >= 2, spill >= 0");
    DensityMatrix out = density_from_json(state, ModeBasis::indices(modes + 2 * spill));
    problem = RetrievalProblem{modes, spill, std::move(out), offset};
  } else {
    const SpilloverSpec spec = read_spec(r);
    const int first = r.get_or<int>("first_mode", 0);
    if (!r.has("state") && !r.has("amplitudes")) {
      throw ConfigError("retrieve needs 'output_state', 'state' or 'amplitudes'");
    }
    const Json& raw = r.has("state") ? r.require("state") : r.require("amplitudes");
    const Index m = raw.is_object() && raw.contains("data")
                        ? Index(std::llround(std::sqrt(double(raw["data"].size()))))
                        : Index(raw.is_array() ? raw.size() : 0);
    if (m < 2) throw Error(ErrorKind::InvalidDimension, "retrieval needs at least two modes");
    const DensityMatrix rho = read_state(r, ModeBasis::range(first, first + int(m) - 1));
    r.finish();
    validate_spec(spec);
    const int l_min = rho.basis()[0];
    const int l_max = rho.basis()[rho.dim() - 1];
    if (l_max - l_min + 1 != rho.dim()) {
      throw Error(ErrorKind::ShapeError, "retrieval needs contiguous initial modes");
    }
    const KrausChannel channel = build_ic_channel(l_min, l_max, spec);
    DensityMatrix out = apply_channel(channel, rho);
    results["input_state"] = to_json(rho);
    problem = RetrievalProblem{rho.dim(), spec.max_spill(), std::move(out), spec.max_spill()};
  }

  const ReconstructedState rec = retrieve_full_state(*problem, opts);
  results["output_state"] = to_json(problem->rho_out);
  results["retrieval_dimension"] = retrieval_dimension(problem->modes, problem->spill);
  results["reconstructed_state"] = to_json(rec.rho);
  results["solves"] = solve_table(rec.solves);
  return {std::move(results), state_csv(rec.rho)};
}

struct CodeInputs {
  Index logical_dim = 0;
  int spill = 0;
  ComplexVector amplitudes;
  std::optional<SpilloverSpec> spec;
};

CodeInputs read_code_inputs(ConfigReader& r) {
  CodeInputs c;
  c.logical_dim = r.get<Index>("logical_dim");
  c.spill = r.get<int>("spill");
  c.amplitudes = vector_from_json(r.require("amplitudes"));
  if (r.has("probs")) c.spec = read_spec(r);
  r.finish();
  if (c.spec && c.spec->max_spill() != c.spill) {
    throw Error(ErrorKind::ChannelSpecError, "probs must list p_0..p_l for the code's spill");
  }
  return c;
}

/// A single spillover error E_k applied to a codeword.
DensityMatrix apply_single_error(const ModeBasis& space, const ComplexVector& psi, int shift) {
  return pure_density(spillover_operator(space, space, shift) * psi, space);
}

/// The IC channel over the codeword range, whose outputs fill the code space.
DensityMatrix apply_code_channel(const std::vector<int>& modes, const SpilloverSpec& spec,
                                 const DensityMatrix& rho) {
  return apply_channel(build_ic_channel(modes.front(), modes.back(), spec), rho);
}

std::vector<int> support_of(const ModeBasis& space, const ComplexMatrix& projector) {
  std::vector<int> modes;
  for (Index i = 0; i < projector.rows(); ++i) {
    if (std::abs(projector(i, i)) > 0.5) modes.push_back(space[i]);
  }
  return modes;
}

ScenarioOutput qerc(ConfigReader& r, std::uint64_t seed) {
  const CodeInputs in = read_code_inputs(r);
  const codes::RejectionCode code = codes::build_rejection_code(in.logical_dim, in.spill);
  const ComplexVector psi = codes::codeword(code, in.amplitudes);
  const DensityMatrix encoded = codes::encode(code, in.amplitudes);

  std::ostringstream csv;
  csv << "error,accept,reject\n";
  Json errors = Json::array();
  const auto add = [&](const std::string& label, const DensityMatrix& rho) {
    const codes::RejectionDistribution d = codes::rejection_distribution(code, rho);
    errors.push_back({{"error", label}, {"accept", d.accept}, {"reject", d.reject}});
    csv << label << ',' << number(d.accept) << ',' << number(d.reject) << '\n';
  };
  add("none", encoded);
  for (int k = 1; k <= in.spill; ++k) {
    for (int shift : {-k, k}) {
      add(codes::Syndrome{shift}.label().replace(0, 1, "E"), apply_single_error(code.space, psi, shift));
    }
  }

  Json results = {{"spacing", code.spacing},
                  {"codeword_modes", code.modes},
                  {"space_modes", code.space.labels()},
                  {"single_errors", std::move(errors)}};
  if (in.spec) {
    const DensityMatrix out = apply_code_channel(code.modes, *in.spec, encoded);
    const codes::RejectionDistribution d = codes::rejection_distribution(code, out);
    results["channel"] = {{"accept", d.accept}, {"reject", d.reject}};
    csv << "channel," << number(d.accept) << ',' << number(d.reject) << '\n';
    std::mt19937_64 rng(seed);
    const codes::RejectionResult sample = codes::measure_rejection(code, out, rng);
    results["sampled"] = {{"accepted", sample.accepted}, {"probability", sample.probability}};
    if (sample.state) results["sampled"]["fidelity"] = codes::fidelity(*sample.state, psi);
  }
  return {std::move(results), csv.str()};
}

Json correction_pairs(const ModeBasis& space, const ComplexMatrix& c) {
  Json pairs = Json::array();
  for (Index col = 0; col < c.cols(); ++col) {
    for (Index row = 0; row < c.rows(); ++row) {
      if (std::abs(c(row, col)) > 0.5) pairs.push_back({{"from", space[col]}, {"to", space[row]}});
    }
  }
  return pairs;
}

ScenarioOutput qecc(ConfigReader& r, std::uint64_t seed) {
  const CodeInputs in = read_code_inputs(r);
  const codes::CorrectionCode code = codes::build_correction_code(in.logical_dim, in.spill);
  const ComplexVector psi = codes::codeword(code, in.amplitudes);
  const DensityMatrix encoded = codes::encode(code, in.amplitudes);

  Json table = Json::array();
  for (const codes::Syndrome& s : code.syndromes()) {
    table.push_back({{"syndrome", s.label()},
                     {"shift", s.shift},
                     {"projector_modes", support_of(code.space, code.projectors.at(s.shift))},
                     {"correction", correction_pairs(code.space, code.corrections.at(s.shift))}});
  }

  std::ostringstream csv;
  csv << "error,syndrome,probability,fidelity\n";
  Json errors = Json::array();
  const auto outcomes_of = [&](const std::string& label, const DensityMatrix& rho) {
    Json outcomes = Json::array();
    for (const codes::SyndromeOutcome& o : codes::syndrome_distribution(code, rho)) {
      Json entry = {{"syndrome", o.syndrome.label()}, {"probability", o.probability}};
      std::string fid;
      if (o.state) {
        const double f = codes::fidelity(codes::correct(code, o.syndrome, *o.state), psi);
        entry["corrected_fidelity"] = f;
        fid = number(f);
      }
      csv << label << ',' << o.syndrome.label() << ',' << number(o.probability) << ',' << fid
          << '\n';
      outcomes.push_back(std::move(entry));
    }
    return outcomes;
  };
  const auto add = [&](const std::string& label, const DensityMatrix& rho) {
    errors.push_back({{"error", label}, {"outcomes", outcomes_of(label, rho)}});
  };
  add("none", encoded);
  for (int k = 1; k <= in.spill; ++k) {
    for (int shift : {-k, k}) {
      add(codes::Syndrome{shift}.label().replace(0, 1, "E"), apply_single_error(code.space, psi, shift));
    }
  }

  Json results = {{"spacing", code.spacing},
                  {"codeword_modes", code.modes},
                  {"space_modes", code.space.labels()},
                  {"syndrome_table", std::move(table)},
                  {"single_errors", std::move(errors)}};
  if (in.spec) {
    const DensityMatrix out = apply_code_channel(code.modes, *in.spec, encoded);
    results["channel"] = outcomes_of("channel", out);
    std::mt19937_64 rng(seed);
    const codes::SyndromeOutcome sample = codes::measure_syndrome(code, out, rng);
    results["sampled"] = {
        {"syndrome", sample.syndrome.label()},
        {"probability", sample.probability},
        {"corrected_fidelity",
         codes::fidelity(codes::correct(code, sample.syndrome, *sample.state), psi)}};
  }
  return {std::move(results), csv.str()};
}

ScenarioOutput analyze(ConfigReader& r, const std::filesystem::path& base_dir) {
  std::vector<IntensityRecord> records;
  const bool has_csv = r.has("csv");
  const bool has_records = r.has("records");
  if (has_csv == has_records) throw ConfigError("give exactly one of 'csv' or 'records'");
  if (has_csv) {
    std::filesystem::path path = r.get<std::string>("csv");
    if (path.is_relative()) path = base_dir / path;
    r.finish();
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot read intensity data " + path.string());
    records = parse_intensity_csv(file);
  } else {
    const auto rows = r.get<std::vector<std::tuple<int, int, double>>>("records");
    r.finish();
    for (const auto& [mode, delta, intensity] : rows) records.push_back({mode, delta, intensity});
  }

  const std::vector<IntensityFit> fits = analyze_intensities(records);
  std::ostringstream csv;
  csv << "delta_ell,count,slope,intercept,relative_change,error\n";
  Json groups = Json::array();
  for (const auto& f : fits) {
    Json g = {{"delta_ell", f.delta_ell}, {"count", f.count}};
    if (f.error) {
      g["error"] = std::string(to_string(*f.error));
      g["slope"] = g["intercept"] = g["relative_change"] = nullptr;
      csv << f.delta_ell << ',' << f.count << ",,,," << to_string(*f.error) << '\n';
    } else {
      g["slope"] = f.slope;
      g["intercept"] = f.intercept;
      g["relative_change"] = f.relative_change;
      csv << f.delta_ell << ',' << f.count << ',' << number(f.slope) << ','
          << number(f.intercept) << ',' << number(f.relative_change) << ",\n";
    }
    groups.push_back(std::move(g));
  }
  return {Json{{"record_count", records.size()}, {"groups", std::move(groups)}}, csv.str()};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllConditioned:
    case ErrorKind::IllPosed:
    case ErrorKind::SingularSystem:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

int report(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  Json j = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  err << j.dump(2) << '\n';
  return code;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"ic-sim", "flip-sim",  "werner",
                                                 "two-qubit", "three-qubit", "retrieve",
                                                 "qerc",   "qecc",      "analyze"};
  return names;
}

ScenarioOutput run_scenario(const std::string& scenario, const Json& config, std::uint64_t seed,
                            const std::filesystem::path& base_dir) {
  ConfigReader r(config, "config");
  if (r.has("scenario") && r.get<std::string>("scenario") != scenario) {
    throw ConfigError("config is for scenario '" + config["scenario"].get<std::string>() +
                      "', not '" + scenario + "'");
  }
  if (scenario == "ic-sim") return ic_sim(r);
  if (scenario == "flip-sim") return flip_sim(r);
  if (scenario == "werner") return werner(r);
  if (scenario == "two-qubit") return two_qubit(r);
  if (scenario == "three-qubit") return three_qubit(r);
  if (scenario == "retrieve") return retrieve(r);
  if (scenario == "qerc") return qerc(r, seed);
  if (scenario == "qecc") return qecc(r, seed);
  if (scenario == "analyze") return analyze(r, base_dir);
  throw ConfigError("unknown scenario '" + scenario + "'");
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  std::string artifact;
  try {
    std::ifstream file(inv.config_path);
    if (!file) throw ConfigError("cannot read config " + inv.config_path.string());
    Json config;
    try {
      config = Json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    const ScenarioOutput result =
        run_scenario(inv.scenario, config, inv.seed, inv.config_path.parent_path());
    if (inv.format == Format::Csv) {
      artifact = result.csv;
    } else {
      Json doc = {{"metadata",
                   {{"tool", kToolName},
                    {"version", kToolVersion},
                    {"scenario", inv.scenario},
                    {"seed", inv.seed}}},
                  {"inputs_echo", config},
                  {"results", result.results}};
      artifact = doc.dump(2) + "\n";
    }
  } catch (const ConfigError& e) {
    return report(err, kExitConfig, "ConfigError", e.what());
  } catch (const nlohmann::json::exception& e) {
    return report(err, kExitConfig, "ConfigError", e.what());
  } catch (const Error& e) {
    return report(err, exit_code_for(e.kind()), std::string(to_string(e.kind())), e.what());
  }

  if (!inv.out_path) {
    out << artifact;
    return kExitOk;
  }
  std::ofstream file(*inv.out_path, std::ios::binary);
  if (!file || !(file << artifact)) {
    return report(err, kExitConfig, "OutputError", "cannot write " + inv.out_path->string());
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate OAM crosstalk channels, retrieve states and run mode codes"};
  Invocation inv;
  std::string config, out_path, format = "json";
  app.add_option("scenario", inv.scenario, "Scenario to run")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  app.add_option("--config", config, "JSON config file")->required();
  app.add_option("--out", out_path, "Write the result here instead of stdout");
  app.add_option("--seed", inv.seed, "Seed for sampled measurements");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kExitConfig, "UsageError", e.what());
  }
  inv.config_path = config;
  if (!out_path.empty()) inv.out_path = out_path;
  inv.format = format == "csv" ? Format::Csv : Format::Json;
  return run(inv, out, err);
}

}  // namespace oamic::cli
