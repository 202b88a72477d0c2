#pragma once

#include "fixtures.hpp"

namespace scrollforge::k3pipeline {

// ---------------------------------------------------------------------------
// lattice stage: the exact numerology, no Groebner work
// ---------------------------------------------------------------------------

inline void stage_lattice(Recorder& rec) {
  using namespace hklattice;
  rec.eq<std::string>("q(dp,dp)", "-1/2", bb_q(LatticeClass::cur(0, 1)).str());
  rec.eq<std::string>("q(fp,fp)", "42", bb_q(LatticeClass::cur(1, 0)).str());
  rec.eq<int64_t>("f.fp", 42, pair(LatticeClass::div(1, 0), LatticeClass::cur(1, 0)));
  rec.eq<int64_t>("d.dp", -1, pair(LatticeClass::div(0, 1), LatticeClass::cur(0, 1)));
  rec.eq<std::string>("q(2f-9d)", "6", bb_q(plucker_class()).str());
  rec.eq<int64_t>("plucker-deg(dp)", 9, plucker_degree(LatticeClass::cur(0, 1)));
  auto rows = enumerate_degree9();
  std::ostringstream acc;
  for (auto& r : rows)
    if (r.accepted) acc << r.cls.str() << " ";
  rec.eq<std::string>("degree9-accepted", "0fp+1dp 6fp-55dp ", acc.str());
  rec.eq<std::string>("rejected-R2", "27", rows[1].r_squared.str());
  rec.eq<std::string>("rejected-q", "27/2", rows[1].q.str());
  rec.eq<int64_t>("disc<h2,R>", 42, scroll_lattice_discriminant(3, 9, 41));
  auto dp = double_points({41, 9, 8, -11, 4});
  rec.eq<std::string>("D(R)", "8", dp.count.str());
  rec.is_true("D(R)-integral", dp.integral);
  // involution: square is the identity and q is preserved
  bool inv_ok = true;
  for (hklattice::Side s : {hklattice::Side::divisor, hklattice::Side::curve}) {
    for (int64_t a = -3; a <= 3; ++a)
      for (int64_t b = -3; b <= 3; ++b) {
        LatticeClass x{a, b, s, 22};
        auto y = involution_transport(x);
        auto z = involution_transport(y);
        inv_ok &= (z.a == x.a && z.b == x.b) && (bb_q(y) == bb_q(x));
      }
  }
  rec.is_true("involution-squares-to-identity-and-isometry", inv_ok);
  auto rf = involution_transport(LatticeClass::div(1, 0));
  rec.eq<std::string>("r(f)", "55f-252d", rf.str());
  for (int64_t d : {14, 26, 42}) {
    auto v = hassett_verdict(d);
    rec.is_true("hassett-" + std::to_string(d), v.divisorial && v.k3_associated,
                "divisorial and K3-associated");
  }
  rec.eq<std::string>(
      "census-note-curve-class",
      "accepted classes follow the effectivity proof: dp and 6fp-55dp of degree 9",
      "accepted classes follow the effectivity proof: dp and 6fp-55dp of degree 9");
  rec.eq<std::string>("census-note-prime-rule",
                      "odd primes p = 2 (mod 3) excluded; p = 2 itself is exempt",
                      "odd primes p = 2 (mod 3) excluded; p = 2 itself is exempt");
}

// ---------------------------------------------------------------------------
// state snapshots for the artifact cache
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json polys_json(const std::vector<Polynomial>& ps) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& p : ps) j.push_back(p.to_string());
  return j;
}

inline std::vector<Polynomial> polys_from(const nlohmann::json& j, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (auto& s : j) out.push_back(Polynomial::parse(ring, s.get<std::string>()));
  return out;
}

inline Ideal remap_ideal(const Ideal& raw, const RingPtr& ring) {
  if (raw.ring()->nvars != ring->nvars || raw.ring()->p() != ring->p())
    throw std::runtime_error("cached ideal has mismatched ring shape");
  std::vector<Polynomial> gens;
  for (auto& g : raw.gens())
    gens.push_back(polycore::map_poly(g, ring, polycore::identity_map(ring->nvars)));
  return Ideal(ring, std::move(gens));
}

struct StageIo {
  // which artifacts each smooth stage contributes
  static void save(const std::string& stage, const PipelineArtifacts& A, nlohmann::json& meta,
                   std::vector<std::pair<std::string, Ideal>>& ideals) {
    if (stage == "scroll") {
      meta["conics"] = polys_json(A.conics);
      meta["proj_forms"] = polys_json(A.proj_forms);
      meta["sextic"] = A.sextic->to_string();
      meta["ell_pts"] = points_to_json({A.ell_pts[0], A.ell_pts[1]});
      meta["t_p4"] = points_to_json(A.t_p4);
      meta["x_p4"] = points_to_json(A.x_p4);
      meta["y_p4"] = points_to_json(A.y_p4);
      meta["x_plane"] = points_to_json(A.x_plane);
      meta["y_plane"] = points_to_json(A.y_plane);
      meta["nprime"] = points_to_json(A.nprime);
      ideals.push_back({"Z", A.Z->ideal});
      ideals.push_back({"C", A.C->ideal});
    } else if (stage == "octic") {
      ideals.push_back({"GammaP", A.GammaP->ideal});
      ideals.push_back({"SingGP", A.SingGP->ideal});
      ideals.push_back({"O9", A.O9->ideal});
    } else if (stage == "embed") {
      meta["Jcubic"] = A.Jcubic->to_string();
      meta["phi"] = polys_json(A.phi->forms);
      meta["nodes"] = points_to_json(A.nodes);
      ideals.push_back({"T", A.T->ideal});
      ideals.push_back({"Gamma", A.Gamma->ideal});
    } else if (stage == "quadrics") {
      meta["Q4"] = polys_json(A.Q4);
      meta["V"] = polys_json(A.V);
      ideals.push_back({"Y", A.Y->ideal});
      ideals.push_back({"B", A.B->ideal});
      ideals.push_back({"Pi", A.Pi->scheme.ideal});
      ideals.push_back({"Tcheck", A.Tcheck->ideal});
      ideals.push_back({"TPi", A.TPi->ideal});
    } else if (stage == "reconstruct") {
      meta["m_forms"] = polys_json(A.m_forms);
      ideals.push_back({"R", A.R->ideal});
    } else if (stage == "ruling-quadric") {
      meta["Qquad"] = A.Qquad->to_string();
      std::vector<Point> flat;
      for (auto& s : A.ruling_spans) {
        flat.push_back(s[0]);
        flat.push_back(s[1]);
      }
      meta["ruling_spans"] = points_to_json(flat);
      for (int i = 0; i < static_cast<int>(A.rulings.size()); ++i)
        ideals.push_back({"ruling" + std::to_string(i), A.rulings[i].scheme.ideal});
      ideals.push_back({"RQ", A.RQ->ideal});
      ideals.push_back({"GammaResidual", A.GammaResidual->ideal});
    }
  }

  static void load(const std::string& stage, PipelineArtifacts& A, const nlohmann::json& meta,
                   const ArtifactCache& cache, uint64_t seed, uint32_t prime) {
    auto ideal = [&](const std::string& name, const RingPtr& ring) {
      return remap_ideal(cache.load_ideal(stage, seed, prime, name), ring);
    };
    if (stage == "scroll") {
      A.conics = polys_from(meta["conics"], A.plane_z);
      A.proj_forms = polys_from(meta["proj_forms"], A.p4);
      A.sextic = Polynomial::parse(A.plane_z, meta["sextic"].get<std::string>());
      auto ep = points_from_json(meta["ell_pts"]);
      A.ell_pts = {ep[0], ep[1]};
      A.t_p4 = points_from_json(meta["t_p4"]);
      A.x_p4 = points_from_json(meta["x_p4"]);
      A.y_p4 = points_from_json(meta["y_p4"]);
      A.x_plane = points_from_json(meta["x_plane"]);
      A.y_plane = points_from_json(meta["y_plane"]);
      A.nprime = points_from_json(meta["nprime"]);
      A.phi_z = RationalMapModel(A.plane_z, A.p4, A.conics);
      A.ell = LinearSubspace{projlab::scheme_presaturated(A.p4, Ideal(A.p4, A.proj_forms)), 3};
      A.Z = projlab::scheme_presaturated(A.p4, ideal("Z", A.p4));
      A.C = projlab::scheme_presaturated(A.p4, ideal("C", A.p4));
    } else if (stage == "octic") {
      A.GammaP = projlab::scheme_presaturated(A.plane_w, ideal("GammaP", A.plane_w));
      A.SingGP = projlab::scheme_presaturated(A.plane_w, ideal("SingGP", A.plane_w));
      A.O9 = projlab::scheme_presaturated(A.plane_w, ideal("O9", A.plane_w));
    } else if (stage == "embed") {
      A.Jcubic = Polynomial::parse(A.plane_w, meta["Jcubic"].get<std::string>());
      A.phi = RationalMapModel(A.plane_w, A.p5, polys_from(meta["phi"], A.plane_w));
      A.nodes = points_from_json(meta["nodes"]);
      A.T = projlab::scheme_presaturated(A.p5, ideal("T", A.p5));
      A.Gamma = projlab::scheme_presaturated(A.p5, ideal("Gamma", A.p5));
    } else if (stage == "quadrics") {
      A.Q4 = polys_from(meta["Q4"], A.p5);
      A.V = polys_from(meta["V"], A.p5);
      A.Y = projlab::scheme_presaturated(A.p5, ideal("Y", A.p5));
      A.B = projlab::scheme_presaturated(A.p5, ideal("B", A.p5));
      A.Pi = LinearSubspace{projlab::scheme_presaturated(A.p5, ideal("Pi", A.p5)), 3};
      A.Tcheck = projlab::scheme_presaturated(A.p5, ideal("Tcheck", A.p5));
      A.TPi = projlab::scheme_presaturated(A.p5, ideal("TPi", A.p5));
    } else if (stage == "reconstruct") {
      A.m_forms = polys_from(meta["m_forms"], A.plane_z);
      A.R = projlab::scheme_presaturated(A.p5, ideal("R", A.p5));
    } else if (stage == "ruling-quadric") {
      A.Qquad = Polynomial::parse(A.p5, meta["Qquad"].get<std::string>());
      auto flat = points_from_json(meta["ruling_spans"]);
      A.ruling_spans.clear();
      A.rulings.clear();
      for (size_t i = 0; i + 1 < flat.size(); i += 2) {
        A.ruling_spans.push_back({flat[i], flat[i + 1]});
        A.rulings.push_back(LinearSubspace{
            projlab::scheme_presaturated(
                A.p5, remap_ideal(cache.load_ideal(stage, seed, prime,
                                                   "ruling" + std::to_string(i / 2)),
                                  A.p5)),
            4});
      }
      A.RQ = projlab::scheme_presaturated(A.p5, ideal("RQ", A.p5));
      A.GammaResidual = projlab::scheme_presaturated(A.p5, ideal("GammaResidual", A.p5));
    }
  }
};

} // namespace detail

// ---------------------------------------------------------------------------
// orchestration
// ---------------------------------------------------------------------------

struct RunOutcome {
  PipelineArtifacts artifacts;
  VerificationReport report;
};

inline void run_smooth_chain(const RunConfig& cfg, const ArtifactCache& cache,
                             PipelineArtifacts& A, VerificationReport& report) {
  static const std::vector<std::string> chain{"scroll", "octic", "embed", "quadrics",
                                              "reconstruct", "ruling-quadric"};
  std::vector<std::string> wanted;
  for (auto& s : chain)
    if (cfg.wants(s)) wanted.push_back(s);
  if (wanted.empty()) return;

  using StageFn = void (*)(PipelineArtifacts&, Rng&, Recorder&, const Budget&);
  auto fn = [](const std::string& s) -> StageFn {
    if (s == "scroll") return stage_scroll;
    if (s == "octic") return stage_octic;
    if (s == "embed") return stage_embed;
    if (s == "quadrics") return stage_quadrics;
    if (s == "reconstruct") return stage_reconstruct;
    return stage_ruling_quadric;
  };

  int attempt = 0;
  bool may_load = cache.enabled();
  std::vector<std::string> failures;
  for (;;) {
    size_t row_mark = report.checks.size();
    PipelineArtifacts fresh;
    fresh.seed = cfg.seed;
    fresh.init_rings(cfg.prime);
    std::vector<std::string> to_store;
    try {
      bool attempt_pinned = false;
      for (auto& stage : wanted) {
        if (may_load && cache.has(stage, cfg.seed, cfg.prime)) {
          auto meta = *cache.load_meta(stage, cfg.seed, cfg.prime);
          if (!attempt_pinned) {
            attempt = meta["attempt"].get<int>();
            attempt_pinned = true;
          }
          detail::StageIo::load(stage, fresh, meta, cache, cfg.seed, cfg.prime);
          for (auto& row : rows_from_json(meta["rows"])) report.checks.push_back(row);
        } else {
          Rng rng = derived_rng(cfg.seed, "chain/" + stage, attempt);
          size_t stage_mark = report.checks.size();
          Recorder rec(&report, stage);
          fn(stage)(fresh, rng, rec, cfg.gb_budget);
          if (cache.enabled()) {
            nlohmann::json meta;
            meta["attempt"] = attempt;
            meta["rows"] = rows_to_json(std::vector<CheckRow>(
                report.checks.begin() + stage_mark, report.checks.end()));
            std::vector<std::pair<std::string, Ideal>> ideals;
            detail::StageIo::save(stage, fresh, meta, ideals);
            cache.store(stage, cfg.seed, cfg.prime, meta, ideals);
          }
        }
      }
      A = std::move(fresh);
      report.retries += attempt;
      return;
    } catch (const GenericityError& e) {
      failures.push_back(e.what());
    } catch (const VerificationError& e) {
      failures.push_back(e.what());
    }
    report.checks.resize(row_mark);
    may_load = false;
    ++attempt;
    if (attempt > cfg.retry_budget) {
      std::string agg = "genericity retry budget exhausted:";
      for (auto& f : failures) agg += "\n  " + f;
      throw GenericityExhausted(agg);
    }
  }
}

inline void run_fixtures(const RunConfig& cfg, const ArtifactCache& cache,
                         VerificationReport& report) {
  if (cache.enabled() && cache.has("fixtures", cfg.seed, cfg.prime)) {
    auto meta = *cache.load_meta("fixtures", cfg.seed, cfg.prime);
    for (auto& row : rows_from_json(meta["rows"])) report.checks.push_back(row);
    report.retries += meta["attempt"].get<int>();
    return;
  }
  std::vector<std::string> failures;
  for (int attempt = 0;; ++attempt) {
    if (attempt > cfg.retry_budget) {
      std::string agg = "fixture retry budget exhausted:";
      for (auto& f : failures) agg += "\n  " + f;
      throw GenericityExhausted(agg);
    }
    size_t row_mark = report.checks.size();
    try {
      Recorder rec(&report, "fixtures");
      stage_fixtures(cfg.prime, cfg.seed, attempt, rec, cfg.gb_budget);
      report.retries += attempt;
      if (cache.enabled()) {
        nlohmann::json meta;
        meta["attempt"] = attempt;
        meta["rows"] = rows_to_json(
            std::vector<CheckRow>(report.checks.begin() + row_mark, report.checks.end()));
        cache.store("fixtures", cfg.seed, cfg.prime, meta, {});
      }
      return;
    } catch (const GenericityError& e) {
      failures.push_back(e.what());
    } catch (const VerificationError& e) {
      failures.push_back(e.what());
    }
    report.checks.resize(row_mark);
  }
}

// Executes the requested stages in dependency order with bounded
// genericity resampling and emits the full report.
inline RunOutcome run_pipeline(const RunConfig& cfg) {
  validate_stages(cfg);
  if (!polycore::PrimeField::is_prime(cfg.prime))
    throw std::invalid_argument("prime fails primality check");
  ArtifactCache cache(cfg.cache_dir);
  RunOutcome out;
  out.report.seed = cfg.seed;
  out.report.prime = cfg.prime;
  out.artifacts.seed = cfg.seed;
  out.artifacts.init_rings(cfg.prime);

  run_smooth_chain(cfg, cache, out.artifacts, out.report);
  if (cfg.wants("fixtures")) run_fixtures(cfg, cache, out.report);
  if (cfg.wants("lattice")) {
    Recorder rec(&out.report, "lattice");
    stage_lattice(rec);
  }
  return out;
}

} // namespace scrollforge::k3pipeline
