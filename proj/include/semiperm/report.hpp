#pragma once

#include <atomic>     // for atomic
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr
#include <string>     // for string
#include <thread>     // for thread
#include <vector>     // for vector

#include <nlohmann/json.hpp>

#include "group_file.hpp"
#include "theorem_lab.hpp"

namespace semiperm {

  struct RunOptions {
    HypothesisMode mode = HypothesisMode::exists;
    std::size_t jobs = 1;
    LemmaOptions lemma;
  };

  struct Report {
    std::vector<VerificationRecord> records;
    // Set when a violation stopped the run: the offending record and a group
    // file from which it can be re-checked.
    std::optional<VerificationRecord> violation;
    std::string violation_group_file;

    std::size_t count(std::string const& status) const {
      return static_cast<std::size_t>(std::count_if(
          records.begin(), records.end(),
          [&](VerificationRecord const& r) { return r.status() == status; }));
    }

    int exit_status() const { return count("violated") > 0 ? 1 : 0; }
  };

  // Check ids accepted by run_corpus, and the groups they expand from.
  inline std::vector<std::string> const& known_checks() {
    static std::vector<std::string> const ids
        = {"main",    "lemma-2.1", "lemma-2.2", "lemma-2.3", "lemma-2.4", "separation",
           "cor-4.1", "cor-4.2",   "cor-4.3",   "srinivasan"};
    return ids;
  }

  // Expands "lemmas", "corollaries" and "all"; keeps the canonical order of
  // known_checks() and drops duplicates.
  inline std::vector<std::string> expand_checks(std::vector<std::string> const& requested) {
    std::vector<bool> on(known_checks().size(), false);
    auto enable = [&](std::string const& id) {
      auto const& ids = known_checks();
      auto it = std::find(ids.begin(), ids.end(), id);
      if (it == ids.end()) {
        throw InvalidArgument("unknown check \"" + id + "\"");
      }
      on[static_cast<std::size_t>(it - ids.begin())] = true;
    };
    for (auto const& r : requested) {
      if (r == "lemmas") {
        for (auto id : {"lemma-2.1", "lemma-2.2", "lemma-2.3", "lemma-2.4", "separation"}) {
          enable(id);
        }
      } else if (r == "corollaries") {
        for (auto id : {"cor-4.1", "cor-4.2", "cor-4.3"}) {
          enable(id);
        }
      } else if (r == "all") {
        for (auto const& id : known_checks()) {
          enable(id);
        }
      } else {
        enable(r);
      }
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < on.size(); ++i) {
      if (on[i]) {
        out.push_back(known_checks()[i]);
      }
    }
    return out;
  }

  // Records of one check on one group.
  inline std::vector<VerificationRecord> run_check(NamedGroup const& ng, std::string const& check,
                                                   RunOptions const& opt) {
    std::vector<VerificationRecord> out;
    auto per_prime = [&](auto&& f) {
      for (auto p : prime_divisors(ng.group.order())) {
        try {
          out.push_back(f(p));
        } catch (CapExceeded const& e) {
          out.push_back(detail::skipped_record(ng.name, p, check, e.what()));
        }
      }
    };
    try {
      if (check == "main") {
        per_prime([&](std::uint64_t p) { return verify_main(ng, p, opt.mode); });
      } else if (check == "lemma-2.1") {
        out = verify_lemma_2_1(ng, opt.lemma);
      } else if (check == "lemma-2.2") {
        out = verify_lemma_2_2(ng, opt.lemma);
      } else if (check == "lemma-2.3") {
        out = verify_lemma_2_3(ng, opt.lemma);
      } else if (check == "lemma-2.4") {
        out = verify_lemma_2_4(ng, opt.lemma);
      } else if (check == "separation") {
        out.push_back(verify_separation(ng));
      } else if (check == "cor-4.1") {
        out = verify_corollary_4_1(ng);
      } else if (check == "cor-4.2") {
        per_prime([&](std::uint64_t p) { return verify_corollary_4_2(ng, p, opt.mode); });
      } else if (check == "cor-4.3") {
        per_prime([&](std::uint64_t p) { return verify_corollary_4_3(ng, p, opt.mode); });
      } else if (check == "srinivasan") {
        out.push_back(verify_srinivasan(ng));
      } else {
        throw InvalidArgument("unknown check \"" + check + "\"");
      }
    } catch (CapExceeded const& e) {
      out.clear();
      out.push_back(detail::skipped_record(ng.name, 0, check, e.what()));
    }
    return out;
  }

  // One task per (group, check), run on `jobs` threads. Records are
  // assembled in task order, so the report does not depend on `jobs`. The
  // first violation stops the hand-out of further tasks.
  inline Report run_corpus(std::vector<NamedGroup> const& corpus,
                           std::vector<std::string> const& checks, RunOptions const& opt = {}) {
    auto const ids = expand_checks(checks);
    std::size_t const ntasks = corpus.size() * ids.size();
    std::vector<std::vector<VerificationRecord>> results(ntasks);
    std::vector<std::exception_ptr> errors(ntasks);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
      while (!stop.load()) {
        std::size_t t = next.fetch_add(1);
        if (t >= ntasks) {
          return;
        }
        try {
          results[t] = run_check(corpus[t / ids.size()], ids[t % ids.size()], opt);
          for (auto const& r : results[t]) {
            if (r.violated) {
              stop.store(true);
            }
          }
        } catch (...) {
          errors[t] = std::current_exception();
          stop.store(true);
        }
      }
    };
    std::size_t const jobs = std::max<std::size_t>(1, std::min(opt.jobs, ntasks));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < jobs; ++i) {
        pool.emplace_back(worker);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    Report rep;
    for (std::size_t t = 0; t < ntasks; ++t) {
      if (errors[t]) {
        std::rethrow_exception(errors[t]);
      }
      for (auto& r : results[t]) {
        if (r.violated && !rep.violation) {
          rep.violation = r;
          rep.violation_group_file = write_group_file(corpus[t / ids.size()]);
        }
        rep.records.push_back(std::move(r));
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline char const* yes_no(bool b) { return b ? "true" : "false"; }

    inline std::string one_line(std::string s) {
      for (auto& c : s) {
        if (c == '\t' || c == '\n') {
          c = ' ';
        }
      }
      return s;
    }
  }  // namespace detail

  // Tab-separated, one record per line, then a summary line. Timings are
  // left out so that equal runs give equal bytes.
  inline std::string format_text(Report const& rep) {
    std::string out = "# check\tgroup\tprime\thypothesis\tconclusion\tstatus\tsampled\twitness\n";
    for (auto const& r : rep.records) {
      out += r.check + "\t" + r.group + "\t" + (r.prime ? std::to_string(r.prime) : "-") + "\t"
             + detail::yes_no(r.hypothesis) + "\t" + detail::yes_no(r.conclusion) + "\t"
             + r.status() + "\t" + (r.sampled ? "sampled" : "exhaustive") + "\t"
             + detail::one_line(r.witness) + "\n";
    }
    out += "# records " + std::to_string(rep.records.size()) + " ok " + std::to_string(rep.count("ok"))
           + " violated " + std::to_string(rep.count("violated")) + " skipped "
           + std::to_string(rep.count("skipped")) + "\n";
    if (rep.violation) {
      out += "# violation " + rep.violation->check + " " + rep.violation->group + "\n";
      std::string gf = rep.violation_group_file;
      std::size_t start = 0;
      while (start < gf.size()) {
        auto end = gf.find('\n', start);
        out += "#   " + gf.substr(start, end - start) + "\n";
        start = end == std::string::npos ? gf.size() : end + 1;
      }
    }
    return out;
  }

  inline nlohmann::json to_json(VerificationRecord const& r) {
    return {{"check", r.check},
            {"group", r.group},
            {"prime", r.prime},
            {"hypothesis", r.hypothesis},
            {"conclusion", r.conclusion},
            {"status", r.status()},
            {"sampled", r.sampled},
            {"instances", r.instances},
            {"hypothesis_instances", r.hypothesis_instances},
            {"witness", r.witness}};
  }

  inline std::string format_json(Report const& rep) {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (auto const& r : rep.records) {
      j["records"].push_back(to_json(r));
    }
    j["summary"] = {{"records", rep.records.size()},
                    {"ok", rep.count("ok")},
                    {"violated", rep.count("violated")},
                    {"skipped", rep.count("skipped")}};
    if (rep.violation) {
      j["violation"] = {{"record", to_json(*rep.violation)},
                        {"group_file", nlohmann::json::parse(rep.violation_group_file)}};
    }
    return j.dump(2) + "\n";
  }

}  // namespace semiperm
