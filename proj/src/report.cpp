#include "veerkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "veerkit/error.hpp"
#include "veerkit/quasipositive.hpp"
#include "veerkit/rewrite.hpp"
#include "veerkit/selfcheck.hpp"
#include "veerkit/twist_knots.hpp"

#ifndef VEERKIT_VERSION
#define VEERKIT_VERSION "dev"
#endif

namespace veerkit {

std::string version() { return VEERKIT_VERSION; }

namespace {

using Clock = std::chrono::steady_clock;

RunReport finish(const std::string &command, json inputs, json results, Clock::time_point start, int exit_code,
                 std::string text) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  json doc{{"command", command},
           {"inputs", std::move(inputs)},
           {"results", std::move(results)},
           {"timing_ms", ms},
           {"version", version()}};
  return {std::move(doc), exit_code, std::move(text)};
}

json words_json(const std::set<DetailedBranchingWord> &forms) {
  json out = json::array();
  for (const auto &f : forms)
    out.push_back(to_string(f));
  return out;
}

int condition_case(TwistFamily f) {
  switch (f) {
  case TwistFamily::EvenPositive:
    return 1;
  case TwistFamily::OddNegative:
    return 2;
  case TwistFamily::OddPositive:
    return 3;
  case TwistFamily::EvenNegative:
    break;
  }
  return 0;
}

bool is_cyclic(const Coloring &c) {
  if (c.initial.empty() || c.initial.front().cycle_type() != std::vector<int>{c.k})
    return false;
  for (const auto &p : c.initial)
    if (p != c.initial.front())
      return false;
  return true;
}

// A list of 1-based images, or a cycle string such as "(1 6)(2 4)".
Permutation permutation_from_json(const json &j, int k) {
  if (j.is_string())
    return Permutation::parse_cycles(j.get<std::string>(), static_cast<std::size_t>(k));
  if (!j.is_array())
    throw InvalidInput("permutation must be a list of 1-based images or a cycle string");
  std::vector<int> img;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw InvalidInput("permutation images must be integers");
    img.push_back(x.get<int>());
  }
  if (static_cast<int>(img.size()) != k)
    throw InvalidInput("permutation of length " + std::to_string(img.size()) + " in a " + std::to_string(k) +
                       "-sheeted cover");
  return Permutation::from_one_based(img);
}

} // namespace

json to_json(const Permutation &p) { return p.one_based(); }

json to_json(const Coloring &c) {
  json init = json::array();
  for (const auto &p : c.initial)
    init.push_back(to_json(p));
  return {{"k", c.k}, {"initial", init}};
}

json to_json(const BraidWord &w) { return w.signed_letters(); }

json to_json(const VeeringReport &r) {
  json out{{"verdict", verdict_name(r.verdict)},
           {"witness", nullptr},
           {"explored_cuts", r.explored_cuts},
           {"sign_sensitive", r.sign_sensitive},
           {"pairs_checked", r.pairs_checked}};
  if (r.witness) {
    json forms = json::array();
    for (const auto &f : r.witness->irreducible)
      forms.push_back(to_string(f));
    out["witness"] = {{"cut", r.witness->cut},
                      {"start_sheet", r.witness->start_sheet + 1},
                      {"word", to_string(r.witness->word)},
                      {"irreducible", forms}};
  }
  if (r.inconclusive_reason)
    out["inconclusive_reason"] = *r.inconclusive_reason;
  return out;
}

Coloring coloring_from_json(const json &j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
    throw InvalidInput("cover JSON needs an integer \"k\"");
  const int k = j["k"].get<int>();
  if (k < 1)
    throw InvalidInput("cover degree must be >= 1");
  const char *key = j.contains("initial") ? "initial" : "cuts";
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidInput("cover JSON needs an \"initial\" list of permutations");
  Coloring c{k, {}};
  for (const auto &p : j[key])
    c.initial.push_back(permutation_from_json(p, k));
  return c;
}

SurfaceCover surface_cover_from_json(const json &j) { return SurfaceCover::from_coloring(coloring_from_json(j)); }

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

unsigned worker_threads() {
  if (const char *env = std::getenv("VEERKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunReport cmd_gen(int m, int rep) {
  const auto start = Clock::now();
  const TwistKnotSpec spec = twist_spec(m, rep);
  const BraidWord w = twist_braid(spec);
  const int sl = self_linking(w);
  const auto expected = expected_max_sl(m);
  json results{{"m", m},
               {"family", family_name(spec.family)},
               {"rep", spec.rep},
               {"braid", to_json(w)},
               {"strands", w.strands()},
               {"sl", sl},
               {"expected_sl", expected},
               {"match", expected.count(sl) == 1},
               {"universal_range", is_universal_range(m)}};
  json line{{"m", m}, {"family", family_name(spec.family)}, {"braid", to_json(w)}, {"strands", w.strands()}, {"sl", sl}};
  return finish("gen", {{"m", m}, {"rep", rep}}, std::move(results), start, kExitOk,
                w.to_string() + "\n" + line.dump() + "\n");
}

RunReport cmd_survey(int m, int rep, int max_k, unsigned threads, const RecordSink &sink) {
  const auto start = Clock::now();
  if (max_k < 1 || max_k > 7)
    throw InvalidInput("--max-k must be in 1..7");
  const TwistKnotSpec spec = twist_spec(m, rep);
  const BraidWord w = twist_braid(spec);
  const int cond = condition_case(spec.family);
  const bool quasipositive = spec.family == TwistFamily::EvenNegative;

  json per_degree = json::array();
  std::size_t nontrivial = 0, left = 0, cyclic_witnesses = 0;
  for (int k = 1; k <= max_k; ++k) {
    const auto covers = enumerate_covers(w, k);
    std::vector<json> records(covers.size());
    std::vector<int> verdicts(covers.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(covers.size());
    auto worker = [&] {
      for (std::size_t i = next++; i < covers.size(); i = next++) try {
        const auto &c = covers[i];
        const auto vr = left_veering_witness(w, c);
        json rec = to_json(c);
        rec["verdict"] = verdict_name(vr.verdict);
        rec["cyclic"] = is_cyclic(c);
        rec["veering"] = to_json(vr);
        if (cond) {
          const auto sheet = check_condition(c, {cond, family_n(spec)});
          rec["condition_sheet"] = sheet ? json(*sheet + 1) : json(nullptr);
        }
        records[i] = std::move(rec);
        verdicts[i] = vr.verdict == Verdict::LeftVeering;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    const unsigned n_threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, covers.size())));
    for (unsigned t = 1; t < n_threads; ++t)
      pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
      t.join();
    for (const auto &e : errors)
      if (e)
        std::rethrow_exception(e);

    std::size_t lv = 0;
    for (std::size_t i = 0; i < covers.size(); ++i) {
      if (sink)
        sink(records[i]);
      if (k > 1) {
        ++nontrivial;
        lv += verdicts[i];
        if (quasipositive && verdicts[i] && is_cyclic(covers[i]))
          ++cyclic_witnesses;
      }
    }
    left += lv;
    per_degree.push_back({{"k", k}, {"covers", covers.size()}, {"left_veering", k > 1 ? lv : 0}});
  }
  const bool all_left = left == nontrivial;
  json results{{"m", m},
               {"family", family_name(spec.family)},
               {"rep", spec.rep},
               {"braid", to_json(w)},
               {"degrees", per_degree},
               {"nontrivial_covers", nontrivial},
               {"all_nontrivial_left_veering", all_left},
               {"vacuous", nontrivial == 0}};
  std::ostringstream text;
  text << "all nontrivial covers left-veering: " << (all_left ? "yes" : "no")
       << (nontrivial == 0 ? " (vacuous: no nontrivial covers)" : "") << "\n";
  int code = kExitOk;
  if (cyclic_witnesses) {
    results["error"] = "left-veering witness on a cyclic cover of a quasipositive braid";
    code = kExitInternal;
  }
  return finish("survey", {{"m", m}, {"rep", rep}, {"max_k", max_k}}, std::move(results), start, code, text.str());
}

RunReport cmd_example() {
  const auto start = Clock::now();
  const SurfaceCover sc{7,
                        {Permutation::parse_cycles("(1 6)(2 4)(3 7)", 7), Permutation::parse_cycles("(1 2)(3 4)(5 6)", 7),
                         Permutation::parse_cycles("(2 3)(4 5)(6 7)", 7)}};
  const BranchingWord word = parse_branching_word("A2 A3 A1 A2 A3 A2' A1' A2 A1 A2 A3'");
  const int sheet = 5;
  const DetailedBranchingWord dw = detail(word, sc, sheet);
  const auto target = parse_detailed_word("A2{6->5} A3{5->4} A2{4->3} A1{3->7} A3{7->6}'");
  const auto red = reduce_all(dw, sc);
  const bool found = red.forms.count(target) == 1;
  const auto chain = found ? reduction_path(dw, target, sc) : std::vector<DetailedBranchingWord>{};

  json chain_json = json::array();
  std::ostringstream text;
  for (const auto &w : chain) {
    chain_json.push_back(to_string(w));
    text << to_string(w) << "\n";
  }
  json cuts = json::array();
  for (const auto &p : sc.cuts)
    cuts.push_back(p.to_string());
  json results{{"cover", {{"k", sc.k}, {"cuts", cuts}}},
               {"word", to_string(word)},
               {"start_sheet", sheet + 1},
               {"detailed", to_string(dw)},
               {"irreducible", words_json(red.forms)},
               {"target", to_string(target)},
               {"target_found", found},
               {"chain", chain_json}};
  const auto inv = lifted_page_invariants(sc);
  results["page"] = {{"euler", inv.euler}, {"boundary", inv.boundary}, {"genus", inv.genus}};
  if (!found)
    text << "target word not among the irreducible forms\n";
  return finish("example", json::object(), std::move(results), start, found ? kExitOk : kExitInternal, text.str());
}

RunReport cmd_qp(int m, int rep) {
  const auto start = Clock::now();
  const TwistKnotSpec spec = twist_spec(m, rep);
  if (spec.family != TwistFamily::EvenNegative)
    throw InvalidInput("qp needs even m <= -4");
  const BraidWord w = twist_braid(spec);
  const auto f = twist_factorization(spec);
  const BraidWord expanded = expand_factorization(f, w.strands());
  const bool ok = verify_quasipositive(w, f);
  const auto code = representative_table(m)[static_cast<std::size_t>(spec.rep - 1)];
  json factors = json::array();
  for (const auto &fac : f.factors)
    factors.push_back({{"conjugator", to_json(fac.conjugator)}, {"generator", fac.generator}});
  json results{{"m", m},
               {"rep", spec.rep},
               {"code", {{"zPlus", code.zPlus}, {"sPlus", code.sPlus}, {"zMinus", code.zMinus}, {"sMinus", code.sMinus}}},
               {"braid", to_json(w)},
               {"strands", w.strands()},
               {"factors", factors},
               {"expanded", to_json(expanded)},
               {"verified", ok}};
  return finish("qp", {{"m", m}, {"rep", rep}}, std::move(results), start, ok ? kExitOk : kExitInternal,
                std::string("quasipositive factorization verified: ") + (ok ? "true" : "false") + "\n");
}

RunReport cmd_covers(const std::string &braid, std::optional<int> strands, int min_k, int max_k,
                     const RecordSink &sink) {
  const auto start = Clock::now();
  if (min_k < 1 || max_k < min_k || max_k > 7)
    throw InvalidInput("cover degrees must satisfy 1 <= k <= 7");
  const BraidWord w = parse_braid(braid, strands);
  json counts = json::array();
  for (int k = min_k; k <= max_k; ++k) {
    const auto covers = enumerate_covers(w, k);
    for (const auto &c : covers)
      if (sink)
        sink(to_json(c));
    counts.push_back({{"k", k}, {"covers", covers.size()}});
  }
  return finish("covers", {{"braid", to_json(w)}, {"strands", w.strands()}, {"min_k", min_k}, {"max_k", max_k}},
                {{"degrees", counts}}, start, kExitOk, {});
}

RunReport cmd_reduce(const SurfaceCover &cover, const std::string &word, int start_sheet, std::size_t budget) {
  const auto start = Clock::now();
  const DetailedBranchingWord dw = word.find('{') != std::string::npos
                                       ? parse_detailed_word(word)
                                       : detail(parse_branching_word(word), cover, start_sheet - 1);
  const auto red = reduce_all(dw, cover, budget);
  std::ostringstream text;
  for (const auto &f : red.forms)
    text << (f.empty() ? "(empty)" : to_string(f)) << "\n";
  const bool complete = red.status == ReductionStatus::Complete;
  json results{{"detailed", to_string(dw)},
               {"irreducible", words_json(red.forms)},
               {"count", red.forms.size()},
               {"status", complete ? "complete" : "budget_exhausted"}};
  return finish("reduce", {{"word", word}, {"start_sheet", start_sheet}, {"budget", budget}}, std::move(results), start,
                kExitOk, text.str());
}

RunReport cmd_veering(const std::string &braid, const Coloring &cover, std::size_t budget) {
  const auto start = Clock::now();
  const BraidWord w = parse_braid(braid, static_cast<int>(cover.initial.size()));
  const auto vr = left_veering_witness(w, cover, {budget, false});
  json results = to_json(vr);
  return finish("veering", {{"braid", to_json(w)}, {"cover", to_json(cover)}, {"budget", budget}}, results, start,
                kExitOk, results.dump() + "\n");
}

RunReport cmd_selfcheck(std::uint64_t seed, std::size_t cases) {
  const auto start = Clock::now();
  json props = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto &r : run_selfcheck(seed, cases)) {
    ok = ok && r.ok();
    json p{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.ok())
      p["first_failure"] = r.first_failure;
    props.push_back(p);
    text << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
  }
  return finish("selfcheck", {{"seed", seed}, {"cases", cases}}, {{"properties", props}, {"all_passed", ok}}, start,
                ok ? kExitOk : kExitInternal, text.str());
}

RunReport run_command(const std::string &command, const std::function<RunReport()> &body) {
  const auto start = Clock::now();
  try {
    return body();
  } catch (const InvalidInput &e) {
    return finish(command, json::object(), {{"error", e.what()}}, start, kExitInvalid,
                  std::string("error: ") + e.what() + "\n");
  } catch (const std::exception &e) {
    return finish(command, json::object(), {{"error", e.what()}}, start, kExitInternal,
                  std::string("internal error: ") + e.what() + "\n");
  }
}

} // namespace veerkit
