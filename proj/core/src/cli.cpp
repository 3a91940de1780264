#include "gcodes/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gcodes/certificate.hpp"
#include "gcodes/graph_code.hpp"
#include "gcodes/io.hpp"
#include "gcodes/report.hpp"

namespace gcodes {

namespace {

unsigned parse_count(const std::string& text, const std::string& flag) {
  unsigned value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || p != text.data() + text.size() || value == 0)
    throw UsageError("flag " + flag + " needs a positive integer, got '" + text + "'");
  return value;
}

unsigned default_workers() {
  if (const char* env = std::getenv("GRAPHCODE_WORKERS")) {
    unsigned value = 0;
    auto [p, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
    if (ec == std::errc() && value > 0) return value;
  }
  return 1;
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty())
    throw UsageError(
        "no subcommand; expected one of: example, build, params, bound, verify, certify, "
        "codes, graph");
  RunConfig cfg;
  cfg.workers = default_workers();
  cfg.subcommand = args[0];

  std::vector<std::string> positionals;
  std::size_t i = 1;
  auto need_value = [&](const std::string& flag) -> const std::string& {
    if (i + 1 >= args.size()) throw UsageError("flag " + flag + " needs a value");
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) != 0) {
      positionals.push_back(tok);
      continue;
    }
    if (tok == "--graph") {
      cfg.graph_spec = need_value(tok);
    } else if (tok == "--inner") {
      cfg.inner_spec = need_value(tok);
    } else if (tok == "--example") {
      cfg.example_name = need_value(tok);
    } else if (tok == "--codeword") {
      cfg.assignment = need_value(tok);
    } else if (tok == "--order") {
      const std::string& v = need_value(tok);
      if (v == "canonical")
        cfg.order = EdgeOrderMode::Canonical;
      else if (v == "file")
        cfg.order = EdgeOrderMode::FileOrder;
      else
        throw UsageError("--order must be canonical or file, got '" + v + "'");
    } else if (tok == "--format") {
      const std::string& v = need_value(tok);
      if (v == "text")
        cfg.format = OutputFormat::Text;
      else if (v == "json")
        cfg.format = OutputFormat::Json;
      else
        throw UsageError("--format must be text or json, got '" + v + "'");
      cfg.format_set = true;
    } else if (tok == "--engine") {
      const std::string& v = need_value(tok);
      if (v == "auto")
        cfg.engine = DistanceEngine::Auto;
      else if (v == "exhaustive")
        cfg.engine = DistanceEngine::Exhaustive;
      else if (v == "bz")
        cfg.engine = DistanceEngine::BrouwerZimmermann;
      else
        throw UsageError("--engine must be auto, exhaustive or bz, got '" + v + "'");
    } else if (tok == "--workers") {
      cfg.workers = parse_count(need_value(tok), tok);
    } else if (tok == "--report") {
      cfg.report_path = need_value(tok);
    } else if (tok == "--r") {
      cfg.builtin_r = parse_count(need_value(tok), tok);
    } else if (tok == "--n") {
      cfg.builtin_n = parse_count(need_value(tok), tok);
    } else {
      throw UsageError("unknown flag '" + tok + "'");
    }
  }

  const std::string& sub = cfg.subcommand;
  if (sub == "example") {
    if (positionals.size() != 1) throw UsageError("usage: example <k777|k333>");
    cfg.example_name = positionals[0];
  } else if (sub == "build" || sub == "params" || sub == "bound") {
    if (!positionals.empty())
      throw UsageError("unexpected argument '" + positionals[0] + "'");
    if (cfg.example_name.empty() && (cfg.graph_spec.empty() || cfg.inner_spec.empty()))
      throw UsageError(sub + " needs --graph and --inner (or --example)");
  } else if (sub == "verify") {
    if (positionals.size() != 1)
      throw UsageError("usage: verify <assignment file|witness|matrix-m> [--example|--graph/--inner]");
    cfg.assignment = positionals[0];
    if (cfg.example_name.empty() && (cfg.graph_spec.empty() || cfg.inner_spec.empty()))
      throw UsageError("verify needs --graph and --inner (or --example)");
  } else if (sub == "certify") {
    if (!positionals.empty())
      throw UsageError("unexpected argument '" + positionals[0] + "'");
    if (cfg.assignment.empty()) throw UsageError("certify needs --codeword <file|witness|matrix-m>");
    if (cfg.example_name.empty() && (cfg.graph_spec.empty() || cfg.inner_spec.empty()))
      throw UsageError("certify needs --graph and --inner (or --example)");
    if (!cfg.format_set) cfg.format = OutputFormat::Json;
  } else if (sub == "codes") {
    if (positionals.empty()) throw UsageError("usage: codes <info|builtin|dsum> ...");
    cfg.group_member = positionals[0];
    if (cfg.group_member == "info") {
      if (positionals.size() != 2) throw UsageError("usage: codes info <file>");
      cfg.positionals = {positionals[1]};
    } else if (cfg.group_member == "builtin") {
      if (positionals.size() != 2)
        throw UsageError("usage: codes builtin <hamming|even|rep> --r/--n <value>");
      cfg.builtin_name = positionals[1];
    } else if (cfg.group_member == "dsum") {
      if (positionals.size() != 3) throw UsageError("usage: codes dsum <fileA> <fileB>");
      cfg.positionals = {positionals[1], positionals[2]};
    } else {
      throw UsageError("unknown codes subcommand '" + cfg.group_member + "'");
    }
  } else if (sub == "graph") {
    if (positionals.size() != 2)
      throw UsageError("usage: graph <info|spectrum|validate> <file|complete:ell,m>");
    cfg.group_member = positionals[0];
    if (cfg.group_member != "info" && cfg.group_member != "spectrum" &&
        cfg.group_member != "validate")
      throw UsageError("unknown graph subcommand '" + cfg.group_member + "'");
    cfg.positionals = {positionals[1]};
  } else {
    throw UsageError("unknown subcommand '" + sub + "'");
  }
  return cfg;
}

namespace {

struct Instance {
  GraphCode code;
  std::vector<std::pair<std::string, std::string>> claims;
  std::string fixture_name;  // empty unless built from an example
};

Instance make_instance(const RunConfig& cfg) {
  if (!cfg.example_name.empty()) {
    Fixture fixture = make_fixture(cfg.example_name);
    return {std::move(fixture.code), std::move(fixture.claims), cfg.example_name};
  }
  auto graph = std::make_shared<const PartiteGraph>(parse_graph_spec(cfg.graph_spec, cfg.order));
  auto inner = parse_code_spec_list(cfg.inner_spec);
  return {GraphCode::build(std::move(graph), std::move(inner)), {}, ""};
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& rendered) {
  if (cfg.report_path.empty()) {
    out << rendered;
    return;
  }
  std::ofstream file(cfg.report_path);
  if (!file) throw UsageError("cannot write report to '" + cfg.report_path + "'");
  file << rendered;
}

DistanceOptions distance_options(const RunConfig& cfg, std::ostream& err) {
  DistanceOptions opts;
  opts.engine = cfg.engine;
  opts.workers = cfg.workers;
  opts.progress = [&err](unsigned lower, unsigned upper) {
    err << "distance bracket: [" << lower << ", " << upper << "]\n";
  };
  return opts;
}

GFVector load_named_assignment(const Instance& inst, const std::string& name) {
  if (name == "witness") {
    if (inst.fixture_name == "k777") return k777_min_weight_witness(inst.code);
    if (inst.fixture_name == "k333") return k333_triangle_witness(inst.code);
    throw UsageError("named witnesses exist only for the built-in examples");
  }
  if (name == "matrix-m") {
    if (inst.fixture_name == "k333") return k333_even_assignment(inst.code);
    throw UsageError("matrix-m is a k333 assignment");
  }
  return load_assignment_file(name, inst.code.field(), inst.code.length());
}

int run_parameter_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Instance inst = make_instance(cfg);
  const bool with_distance = cfg.subcommand == "example" || cfg.subcommand == "params";
  auto claims = inst.claims;
  if (!with_distance) {
    // Without an exact distance the D claim cannot be judged; drop it.
    std::erase_if(claims, [](const auto& c) { return c.first == "D"; });
  }
  ParameterReport rep =
      make_parameter_report(inst.code, with_distance, distance_options(cfg, err), claims);
  if (cfg.subcommand == "bound" && cfg.format == OutputFormat::Text) {
    std::ostringstream text;
    text << "bound = " << rep.bound.to_string() << "\n";
    text << "lambda2 = " << (rep.lambda2.is_exact() ? rep.lambda2.exact->to_string()
                                                    : std::to_string(rep.lambda2.value))
         << "\n";
    emit(cfg, out, text.str());
  } else {
    emit(cfg, out, cfg.format == OutputFormat::Json ? to_json(rep) : to_text(rep));
  }
  if (!rep.claims_ok()) {
    err << "paper-claim check failed:\n";
    for (const auto& c : rep.claims)
      if (!c.match)
        err << "  " << c.name << ": claimed " << c.claimed << ", computed " << c.computed << "\n";
    return 1;
  }
  return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  Instance inst = make_instance(cfg);
  GFVector assignment = load_named_assignment(inst, cfg.assignment);
  const auto result = inst.code.verify_membership(assignment);
  const std::string rendered =
      cfg.format == OutputFormat::Json
          ? membership_to_json(result, assignment.weight(),
                               order_convention_name(inst.code.graph().order_mode()))
          : membership_to_text(result, assignment.weight());
  emit(cfg, out, rendered);
  return 0;
}

int run_certify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  Instance inst = make_instance(cfg);
  GFVector assignment = load_named_assignment(inst, cfg.assignment);
  const SupportCertificate cert = certify(inst.code, assignment);
  const std::string rendered =
      cfg.format == OutputFormat::Json
          ? certificate_to_json(cert, order_convention_name(inst.code.graph().order_mode()))
          : certificate_to_text(cert);
  emit(cfg, out, rendered);
  return cert.valid() ? 0 : 1;
}

int run_codes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.group_member == "info") {
    const LinearCode code = load_code_file(cfg.positionals[0]);
    std::optional<unsigned> d;
    std::string note;
    try {
      DistanceOptions opts;
      opts.engine = cfg.engine;
      opts.workers = cfg.workers;
      d = code.min_distance(opts);
    } catch (const CapacityError& e) {
      note = e.what();
    }
    if (cfg.format == OutputFormat::Json) {
      std::ostringstream j;
      j << "{\n  \"n\": " << code.length() << ",\n  \"k\": " << code.dimension() << ",\n  \"d\": ";
      if (d)
        j << *d;
      else
        j << "null";
      j << ",\n  \"q\": " << code.field()->order() << "\n}\n";
      emit(cfg, out, j.str());
    } else {
      std::ostringstream text;
      text << "[" << code.length() << ", " << code.dimension() << ", "
           << (d ? std::to_string(*d) : "?") << "] over GF(" << code.field()->order() << ")\n";
      if (!note.empty()) text << "d not computed: " << note << "\n";
      emit(cfg, out, text.str());
    }
    return 0;
  }
  if (cfg.group_member == "builtin") {
    LinearCode code = [&] {
      if (cfg.builtin_name == "hamming") {
        if (!cfg.builtin_r) throw UsageError("codes builtin hamming needs --r");
        return LinearCode::hamming_binary(cfg.builtin_r);
      }
      if (cfg.builtin_name == "even") {
        if (!cfg.builtin_n) throw UsageError("codes builtin even needs --n");
        return LinearCode::even_weight(cfg.builtin_n);
      }
      if (cfg.builtin_name == "rep") {
        if (!cfg.builtin_n) throw UsageError("codes builtin rep needs --n");
        return LinearCode::repetition_binary(cfg.builtin_n);
      }
      throw UsageError("unknown builtin code '" + cfg.builtin_name + "'");
    }();
    std::ostringstream file;
    save_code(file, code);
    emit(cfg, out, file.str());
    err << "[" << code.length() << ", " << code.dimension() << ", " << code.min_distance()
        << "] over GF(" << code.field()->order() << ")\n";
    return 0;
  }
  // dsum
  const LinearCode a = load_code_file(cfg.positionals[0]);
  const LinearCode b = load_code_file(cfg.positionals[1]);
  const LinearCode sum = a.direct_sum(b);
  std::ostringstream file;
  save_code(file, sum);
  emit(cfg, out, file.str());
  return 0;
}

int run_graph(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const PartiteGraph graph = parse_graph_spec(cfg.positionals[0], cfg.order);
  const auto validation = graph.validate_balanced();
  if (cfg.group_member == "info") {
    std::ostringstream text;
    if (cfg.format == OutputFormat::Json) {
      text << "{\n  \"ell\": " << graph.ell() << ",\n  \"m\": " << graph.m()
           << ",\n  \"n\": " << graph.n() << ",\n  \"vertices\": " << graph.vertex_count()
           << ",\n  \"edges\": " << graph.edges().size()
           << ",\n  \"balanced\": " << (validation.valid() ? "true" : "false")
           << ",\n  \"complete_multipartite\": "
           << (graph.is_complete_multipartite() ? "true" : "false") << ",\n  \"lambda2\": ";
      const auto l2 = graph.lambda2();
      if (l2.is_exact() && l2.exact->is_integer())
        text << l2.exact->num();
      else
        text << l2.value;
      text << ",\n  \"order_convention\": \"" << order_convention_name(graph.order_mode())
           << "\"\n}\n";
    } else {
      text << graph.ell() << "-partite, m=" << graph.m() << ", n=" << graph.n() << ", "
           << graph.vertex_count() << " vertices, " << graph.edges().size() << " edges\n";
      text << "balanced: " << (validation.valid() ? "yes" : "no") << "\n";
      const auto l2 = graph.lambda2();
      text << "lambda2 = " << (l2.is_exact() ? l2.exact->to_string() : std::to_string(l2.value))
           << "\n";
      text << "edge order: " << order_convention_name(graph.order_mode()) << "\n";
    }
    emit(cfg, out, text.str());
    return 0;
  }
  if (cfg.group_member == "spectrum") {
    const auto values = graph.spectrum();
    std::ostringstream text;
    if (cfg.format == OutputFormat::Json) {
      text << "[";
      for (std::size_t i = 0; i < values.size(); ++i) text << (i ? ", " : "") << values[i];
      text << "]\n";
    } else {
      for (double v : values) text << v << "\n";
    }
    emit(cfg, out, text.str());
    return 0;
  }
  // validate
  std::ostringstream text;
  if (validation.valid()) {
    text << "valid: conditions (i) and (ii) hold\n";
  } else {
    text << "invalid: " << validation.violations.size() << " violation(s)\n";
    for (const auto& v : validation.violations) text << "  " << v.detail << "\n";
  }
  emit(cfg, out, text.str());
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == "example" || cfg.subcommand == "build" || cfg.subcommand == "params" ||
      cfg.subcommand == "bound")
    return run_parameter_command(cfg, out, err);
  if (cfg.subcommand == "verify") return run_verify(cfg, out, err);
  if (cfg.subcommand == "certify") return run_certify(cfg, out, err);
  if (cfg.subcommand == "codes") return run_codes(cfg, out, err);
  if (cfg.subcommand == "graph") return run_graph(cfg, out, err);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

int cli_main(int argc, char** argv) {
  try {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const RunConfig cfg = parse_config(args);
    return run(cfg, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gcodes
