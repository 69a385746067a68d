#include "repkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "repkit/audit.hpp"

namespace repkit::cli {

namespace {

using serial::Json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  std::string text = serial::dump(j);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + out_path);
  f << text;
}

// Loads either a standalone representation file or an object file.
cat::AbObject load_object(const std::string& path) {
  Json j = load_json(path);
  if (j.contains("quiver") && j.contains("vertices"))
    return serial::rep_from_json(j);
  return serial::object_from_json(j);
}

struct SuiteEntryResult {
  std::string name;
  bool pass = false;
  int exit_code = 0;
  Json detail;
};

SuiteEntryResult run_suite_entry(const Json& e, const std::string& base) {
  SuiteEntryResult r;
  r.name = e.value("name", "entry");
  std::string kind = e.value("kind", "audit");
  auto resolve = [&](const std::string& p) {
    return p.empty() || p.front() == '/' || base.empty() ? p
                                                         : base + "/" + p;
  };
  try {
    if (kind == "audit") {
      audit::AuditConfig cfg;
      cfg.theorem = e.at("theorem").get<std::string>();
      cfg.samples = e.value("samples", std::size_t{100});
      cfg.seed = e.value("seed", std::uint64_t{0});
      if (e.contains("inner"))
        cfg.inner = serial::category_from_json(e.at("inner"));
      if (e.contains("quiver"))
        cfg.quiver = serial::quiver_from_json(e.at("quiver"));
      audit::AuditReport rep = audit::run_audit(cfg);
      r.pass = rep.pass;
      r.exit_code = rep.pass ? 0 : 1;
      r.detail = audit::report_to_json(rep);
    } else if (kind == "cert_verify") {
      cat::AbObject f = serial::rep_from_json(
          load_json(resolve(e.at("rep").get<std::string>())));
      Json cj = load_json(resolve(e.at("cert").get<std::string>()));
      filtration::FiltrationCertificate cert =
          serial::certificate_from_json(cj, f);
      cat::ClassOracle oracle = cat::named_oracle(
          f.cat->inner, e.value("class", cert.class_name));
      filtration::VerifyResult v =
          filtration::verify_certificate(f, cert, oracle);
      r.pass = v.ok;
      r.exit_code = v.ok ? 0 : 1;
      r.detail["verified"] = v.ok;
      if (!v.ok) r.detail["first_failure"] = v.first_failure;
    } else {
      throw ValidationError("unknown suite entry kind: " + kind);
    }
  } catch (const ValidationError& ex) {
    r.pass = false;
    r.exit_code = 2;
    r.detail["error"] = ex.what();
  } catch (const Error& ex) {
    r.pass = false;
    r.exit_code = 3;
    r.detail["error"] = ex.what();
  }
  return r;
}

int suite_run(const std::string& manifest_path, std::ostream& out) {
  Json manifest = load_json(manifest_path);
  std::string base;
  if (auto slash = manifest_path.find_last_of('/');
      slash != std::string::npos)
    base = manifest_path.substr(0, slash);
  const Json& entries = manifest.at("entries");

  std::size_t workers = 1;
  if (const char* env = std::getenv("REPKIT_THREADS"))
    workers = std::max<long>(1, std::atol(env));

  std::vector<SuiteEntryResult> results(entries.size());
  if (workers <= 1 || entries.size() <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      results[i] = run_suite_entry(entries[i], base);
  } else {
    // audits are pure; join in manifest order for stable output
    std::vector<std::future<SuiteEntryResult>> futures;
    for (std::size_t i = 0; i < entries.size(); ++i)
      futures.push_back(std::async(std::launch::async, run_suite_entry,
                                   entries[i], base));
    for (std::size_t i = 0; i < entries.size(); ++i)
      results[i] = futures[i].get();
  }

  Json j;
  j["manifest"] = manifest_path;
  int worst = 0;
  bool all_pass = true;
  Json rows = Json::array();
  for (const SuiteEntryResult& r : results) {
    Json row;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
    worst = std::max(worst, r.exit_code);
    all_pass = all_pass && r.pass;
  }
  j["entries"] = std::move(rows);
  j["pass"] = all_pass;
  emit(j, "", out);
  return worst;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"quiver representation toolkit"};
  app.require_subcommand(1);

  std::string in_path, second_path, out_path, class_name = "all",
                                              theorem = "A";
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string quiver_path, inner_json;
  bool psi_mode = false;

  CLI::App* quiver_cmd = app.add_subcommand("quiver", "quiver tools");
  CLI::App* quiver_check =
      quiver_cmd->add_subcommand("check", "classify a quiver");
  quiver_check->add_option("file", in_path)->required();

  CLI::App* rep_cmd = app.add_subcommand("rep", "representation tools");
  CLI::App* rep_validate =
      rep_cmd->add_subcommand("validate", "structural diagnostics");
  rep_validate->add_option("file", in_path)->required();

  CLI::App* phi_cmd = app.add_subcommand("phi", "Phi/Psi classifiers");
  CLI::App* phi_classify =
      phi_cmd->add_subcommand("classify", "membership in Phi(class)");
  phi_classify->add_option("file", in_path)->required();
  phi_classify->add_option("--class", class_name);
  phi_classify->add_flag("--psi", psi_mode,
                         "classify membership in Psi instead");

  CLI::App* filtrate_cmd =
      app.add_subcommand("filtrate", "emit a filtration certificate");
  filtrate_cmd->add_option("file", in_path)->required();
  filtrate_cmd->add_option("--class", class_name);
  filtrate_cmd->add_option("-o,--out", out_path);

  CLI::App* cert_cmd = app.add_subcommand("cert", "certificate tools");
  CLI::App* cert_verify =
      cert_cmd->add_subcommand("verify", "re-verify a certificate");
  cert_verify->add_option("rep", in_path)->required();
  cert_verify->add_option("cert", second_path)->required();
  cert_verify->add_option("--class", class_name);

  CLI::App* dual_cmd =
      app.add_subcommand("dual", "Pontryagin dual of a representation");
  dual_cmd->add_option("file", in_path)->required();
  dual_cmd->add_option("-o,--out", out_path);

  CLI::App* gproj_cmd =
      app.add_subcommand("gproj", "Gorenstein projectivity");
  CLI::App* gproj_check = gproj_cmd->add_subcommand("check", "verdict");
  gproj_check->add_option("file", in_path)->required();

  CLI::App* flat_cmd = app.add_subcommand("flat", "flatness via duals");
  CLI::App* flat_check = flat_cmd->add_subcommand("check", "verdict");
  flat_check->add_option("file", in_path)->required();

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "randomized theorem audit");
  audit_cmd->add_option("--theorem", theorem)->required();
  audit_cmd->add_option("--samples", samples);
  audit_cmd->add_option("--seed", seed);
  audit_cmd->add_option("--quiver", quiver_path);
  audit_cmd->add_option("--inner", inner_json,
                        "category JSON file for the inner instance");

  CLI::App* suite_cmd = app.add_subcommand("suite", "batch runner");
  CLI::App* suite_run_cmd =
      suite_cmd->add_subcommand("run", "run a manifest");
  suite_run_cmd->add_option("manifest", in_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (quiver_check->parsed()) {
    quiver::Quiver q = serial::quiver_from_json(load_json(in_path));
    emit(serial::to_json(quiver::classify_quiver(q)), out_path, out);
    return 0;
  }
  if (rep_validate->parsed()) {
    cat::AbObject f =
        serial::rep_from_json_lenient(load_json(in_path));
    std::vector<std::string> diags = cat::rep_diagnostics(*f.rep);
    Json j;
    j["valid"] = diags.empty();
    j["diagnostics"] = diags;
    emit(j, "", out);
    return diags.empty() ? 0 : 1;
  }
  if (phi_classify->parsed()) {
    cat::AbObject f = serial::rep_from_json(load_json(in_path));
    cat::ClassOracle oracle =
        cat::named_oracle(f.cat->inner, class_name);
    Json j;
    bool member;
    if (psi_mode) {
      cat::MembershipVerdict v = cat::in_psi(f, oracle);
      member = v.member;
      j["report"] = serial::to_json(cat::psi_report(f));
      j["membership"] = serial::to_json(v);
    } else {
      cat::MembershipVerdict v = cat::in_phi(f, oracle);
      member = v.member;
      j["report"] = serial::to_json(cat::phi_report(f));
      j["membership"] = serial::to_json(v);
    }
    j["class"] = class_name;
    emit(j, "", out);
    return member ? 0 : 1;
  }
  if (filtrate_cmd->parsed()) {
    cat::AbObject f = serial::rep_from_json(load_json(in_path));
    cat::ClassOracle oracle =
        cat::named_oracle(f.cat->inner, class_name);
    filtration::FiltrationCertificate cert =
        filtration::filtrate(f, oracle);
    emit(serial::certificate_to_json(cert), out_path, out);
    return 0;
  }
  if (cert_verify->parsed()) {
    cat::AbObject f = serial::rep_from_json(load_json(in_path));
    Json cj = load_json(second_path);
    filtration::FiltrationCertificate cert =
        serial::certificate_from_json(cj, f);
    std::string cls = cert_verify->count("--class") ? class_name
                                                    : cert.class_name;
    cat::ClassOracle oracle = cat::named_oracle(f.cat->inner, cls);
    filtration::VerifyResult v =
        filtration::verify_certificate(f, cert, oracle);
    Json j;
    j["verified"] = v.ok;
    if (!v.ok) j["first_failure"] = v.first_failure;
    emit(j, "", out);
    return v.ok ? 0 : 1;
  }
  if (dual_cmd->parsed()) {
    cat::AbObject f = load_object(in_path);
    cat::AbObject d = cat::dualize(f);
    emit(d.cat->kind == cat::CatKind::repcat
             ? serial::rep_to_json(d)
             : serial::object_to_json(d, true),
         out_path, out);
    return 0;
  }
  if (gproj_check->parsed()) {
    cat::AbObject x = load_object(in_path);
    gorenstein::GorensteinVerdict v = gorenstein::is_gproj(x);
    Json j;
    j["gproj"] = v.holds;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) {
      gorenstein::AcyclicityVerdict check =
          gorenstein::verify_total_acyclicity(
              *v.witness,
              gorenstein::indecomposable_projectives(x.cat));
      j["witness"] = serial::resolution_to_json(*v.witness);
      j["witness_verified"] =
          check.ok() && gorenstein::verify_syzygy(*v.witness, x);
    }
    emit(j, "", out);
    return v.holds ? 0 : 1;
  }
  if (flat_check->parsed()) {
    cat::AbObject x = load_object(in_path);
    bool flat = gorenstein::is_flat(x);
    bool wg = gorenstein::is_wgflat(x);
    Json j;
    j["flat"] = flat;
    j["wgflat"] = wg;
    emit(j, "", out);
    return flat ? 0 : 1;
  }
  if (audit_cmd->parsed()) {
    audit::AuditConfig cfg;
    cfg.theorem = theorem;
    cfg.samples = samples;
    cfg.seed = seed;
    if (!quiver_path.empty())
      cfg.quiver = serial::quiver_from_json(load_json(quiver_path));
    if (!inner_json.empty())
      cfg.inner = serial::category_from_json(load_json(inner_json));
    audit::AuditReport rep = audit::run_audit(cfg);
    emit(audit::report_to_json(rep), "", out);
    return rep.pass ? 0 : 1;
  }
  if (suite_run_cmd->parsed()) return suite_run(in_path, out);
  err << "no subcommand\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const NotInPhi& e) {
    err << "negative: " << e.what() << "\n";
    return 1;
  } catch (const NotWGFlat& e) {
    err << "negative: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const FieldMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityMissing& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace repkit::cli
