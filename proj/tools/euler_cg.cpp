// euler-cg: batch front-end. One instance per invocation; the result
// document goes to --out or stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verified negative answer, 2 precondition or
// unsupported case, 3 search bound exhausted, 4 parse or schema error,
// 5 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eulercg/errors.hpp"
#include "verbs.hpp"

namespace {

using ecg::cli::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ecg::ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

void write_doc(const json& doc, const std::string& out) {
  std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ecg::ParseError("cannot write " + out);
  f << text;
}

struct Options {
  std::string verb, file, ring, instance, out, ideal, elt;
  std::optional<int> bound;
};

int run(const Options& o) {
  json inst = o.instance.empty() ? json::object() : read_json(o.instance);
  if (!inst.is_object()) throw ecg::ParseError("instance must be an object");

  std::string verb = o.verb;
  if (inst.contains("task")) {
    std::string task = inst.at("task").get<std::string>();
    if (verb.empty()) verb = task;
    else if (verb != task) throw ecg::ParseError("verb '" + verb + "' differs from instance task '" + task + "'");
  }
  if (verb.empty()) throw ecg::ParseError("no verb given");
  if (!ecg::cli::is_verb(verb)) throw ecg::ParseError("unknown verb '" + verb + "'");

  // --bound wins over the instance, which wins over the environment
  std::optional<long> bound = o.bound;
  if (!bound && inst.contains("bounds") && inst.at("bounds").contains("search"))
    bound = ecg::cli::to_long(inst.at("bounds").at("search"));
  if (bound) {
    if (*bound <= 0) throw ecg::PreconditionError("bound must be positive");
    setenv("EULER_CG_BOUND", std::to_string(*bound).c_str(), 1);
  }

  std::optional<ecg::Ring> ring;
  if (!o.ring.empty()) ring = ecg::cli::ring_from_json(read_json(o.ring));
  else if (inst.contains("ring") && verb != "verify-cert") ring = ecg::cli::ring_from_json(inst.at("ring"));

  if (verb == "verify-cert") {
    std::string path = !o.file.empty() ? o.file : o.instance;
    if (path.empty()) throw ecg::ParseError("verify-cert needs a bundle file");
    ecg::cli::Outcome rep = ecg::cli::verify_bundle(read_json(path), ring);
    write_doc(rep.result, o.out);
    return rep.status;
  }
  if (!o.file.empty()) throw ecg::ParseError("unexpected argument " + o.file);
  if (!ring) throw ecg::ParseError("no ring: pass --ring or put one in the instance");

  json payload = inst.contains("payload") ? inst.at("payload") : json::object();
  if (!payload.is_object()) throw ecg::ParseError("payload must be an object");
  if (!o.ideal.empty()) payload["ideal"] = o.ideal;
  if (!o.elt.empty()) payload["element"] = o.elt;

  ecg::cli::Outcome res = ecg::cli::run_verb(verb, *ring, payload);
  write_doc(ecg::cli::make_bundle(verb, *ring, res), o.out);
  return res.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"euler-cg: certified ideal arithmetic and Euler class group computations"};
  Options o;
  std::string verbs;
  for (const auto& v : ecg::cli::verb_names()) verbs += (verbs.empty() ? "" : ", ") + v;
  app.add_option("verb", o.verb, "one of: " + verbs);
  app.add_option("file", o.file, "bundle to check (verify-cert)");
  app.add_option("--ring", o.ring, "ring descriptor JSON file");
  app.add_option("--instance", o.instance, "problem instance JSON file");
  app.add_option("--bound", o.bound, "search bound (overrides EULER_CG_BOUND)");
  app.add_option("--out", o.out, "write the result here instead of stdout");
  app.add_option("--ideal", o.ideal, "payload.ideal, e.g. '(x, y)'");
  app.add_option("--elt", o.elt, "payload.element");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    return run(o);
  } catch (const ecg::ParseError& e) {
    std::cerr << "euler-cg: parse error: " << e.what() << "\n";
    return 4;
  } catch (const json::exception& e) {
    std::cerr << "euler-cg: parse error: " << e.what() << "\n";
    return 4;
  } catch (const ecg::PreconditionError& e) {
    std::cerr << "euler-cg: precondition: " << e.what() << "\n";
    return 2;
  } catch (const ecg::NotSupported& e) {
    std::cerr << "euler-cg: not supported: " << e.what() << "\n";
    return 2;
  } catch (const ecg::BoundExhausted& e) {
    std::cerr << "euler-cg: bound exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "euler-cg: internal error: " << e.what() << "\n";
    return 5;
  }
}
