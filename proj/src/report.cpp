#include "xnf/report.hpp"

#include <chrono>
#include <sstream>

namespace xnf {

using nlohmann::json;

namespace {

json nat_json(const Nat& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return to_string(x);
}

json check_json(const std::optional<bool>& c) {
  if (!c) return "skipped";
  return *c;
}

std::string check_text(const std::optional<bool>& c) {
  if (!c) return "skipped";
  return *c ? "true" : "false";
}

class Stopwatch {
 public:
  long long lap() {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json form_json(const FactorForm& f) {
  return {{"kind", to_string(f.kind)}, {"family", f.family}, {"t", nat_json(f.t)},
          {"u", f.u},                  {"level", f.level},   {"orbit", f.orbit}};
}

json case_json(const CaseTag& tag) {
  json j = {{"tag", tag.name()}, {"order", nat_json(tag.order)}};
  if (tag.w) j["w"] = tag.w;
  if (tag.w1) j["w1"] = tag.w1;
  if (tag.w2) j["w2"] = tag.w2;
  return j;
}

json params_json(const CaseParams& p) {
  json j;
  j["tower_degree"] = p.tower_degree;
  j["r"] = p.r;
  for (const auto& [k, v] : p.buckets) j["buckets"][k] = nat_json(v);
  for (const auto& [k, v] : p.m) j["m"][k] = nat_json(v);
  for (const auto& [k, v] : p.g) j["g"][std::to_string(k)] = nat_json(v);
  for (const auto& [k, v] : p.l) j["l"][std::to_string(k)] = nat_json(v);
  if (p.A) j["A"] = nat_json(*p.A);
  if (p.B) j["B"] = nat_json(*p.B);
  return j;
}

std::vector<Poly> polys_of(const std::vector<ReportFactor>& fs) {
  std::vector<Poly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.poly);
  return out;
}

bool same_multiset(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "closed") return Mode::Closed;
  if (s == "oracle") return Mode::Oracle;
  if (s == "both") return Mode::Both;
  throw UsageError("unknown mode: " + s);
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Closed:
      return "closed";
    case Mode::Oracle:
      return "oracle";
    case Mode::Both:
      break;
  }
  return "both";
}

bool FactorReport::failed() const {
  auto bad = [](const std::optional<bool>& c) { return c && !*c; };
  return bad(product_ok) || bad(all_irreducible) || !count_matches || bad(oracle_agrees);
}

FactorReport run_factorization(const RunOptions& opts) {
  const PrimePowerForm pp = require_valid_pair(opts.n, opts.q);
  FactorReport r;
  r.n = opts.n;
  r.q = opts.q;
  r.p = pp.p;
  r.s = pp.s;
  Stopwatch clock;
  r.tag = classify(opts.n, opts.q);

  std::optional<ClosedFormFactorization> closed;
  if (opts.mode != Mode::Oracle) {
    auto res = factor_closed_form(opts.n, opts.q, opts.threads);
    if (auto* cf = std::get_if<ClosedFormFactorization>(&res)) closed = std::move(*cf);
    r.timing_ms["closed_form"] = clock.lap();
  }
  if (closed) r.params = closed->params;

  std::optional<OracleFactorization> oracle;
  const bool want_oracle = opts.mode != Mode::Closed || !closed;
  if (want_oracle) {
    auto res = factor_by_cosets(opts.n, opts.q, opts.budget);
    if (auto* of = std::get_if<OracleFactorization>(&res)) {
      oracle = std::move(*of);
    } else {
      r.oracle_note = std::get<OracleSkip>(res).reason;
    }
    r.timing_ms["oracle"] = clock.lap();
  }

  if (closed) {
    r.source = "closed";
    for (auto& f : closed->factors) r.factors.push_back({f.poly, form_json(f.form)});
  } else if (oracle) {
    r.source = "oracle";
    for (auto& f : oracle->factors) r.factors.push_back({f.poly, {{"kind", "coset"}, {"leader", f.leader}}});
  } else {
    throw ResourceError("closed form unavailable for " + r.tag.name() + " and oracle skipped: " + r.oracle_note);
  }

  const FieldCtx& Fq = *galois_field(opts.q);
  if (opts.verify) {
    const std::size_t n = static_cast<std::size_t>(to_u64(opts.n));
    r.product_ok = product(Fq, polys_of(r.factors)) == Poly::x_pow_minus_one(Fq, n);
    r.timing_ms["product_check"] = clock.lap();
    bool irr = true;
    for (const auto& f : r.factors) irr = irr && is_irreducible(f.poly);
    r.all_irreducible = irr;
    r.timing_ms["irreducibility_check"] = clock.lap();
  }

  r.count_formula = count_closed_form(opts.n, opts.q);
  r.coset_count = count_by_cosets(opts.n, opts.q);
  r.count_matches = Nat(r.factors.size()) == r.coset_count && (!r.count_formula || *r.count_formula == r.coset_count);
  if (closed && oracle) {
    std::vector<Poly> theirs;
    for (const auto& f : oracle->factors) theirs.push_back(f.poly);
    r.oracle_agrees = same_multiset(polys_of(r.factors), theirs);
  }
  r.timing_ms["counts"] = clock.lap();
  return r;
}

json to_json(const FactorReport& r, bool timing) {
  json j;
  j["n"] = nat_json(r.n);
  j["q"] = {{"value", nat_json(r.q)}, {"p", nat_json(r.p)}, {"s", r.s}};
  j["case"] = case_json(r.tag);
  if (r.params) j["params"] = params_json(*r.params);
  j["source"] = r.source;
  j["num_factors"] = r.factors.size();
  json fs = json::array();
  for (const auto& f : r.factors) {
    fs.push_back({{"degree", f.poly.degree()}, {"form", f.form}, {"coeffs", encode(f.poly)}});
  }
  j["factors"] = std::move(fs);
  json checks;
  checks["product_ok"] = check_json(r.product_ok);
  checks["all_irreducible"] = check_json(r.all_irreducible);
  checks["count_formula"] = r.count_formula ? nat_json(*r.count_formula) : json(nullptr);
  checks["coset_count"] = nat_json(r.coset_count);
  checks["count_matches"] = r.count_matches;
  checks["oracle_agrees"] = check_json(r.oracle_agrees);
  if (!r.oracle_note.empty()) checks["oracle_note"] = r.oracle_note;
  j["checks"] = std::move(checks);
  if (timing) j["timing_ms"] = r.timing_ms;
  return j;
}

std::string to_text(const FactorReport& r, bool timing) {
  std::ostringstream os;
  os << "n=" << r.n << " q=" << r.q << " (p=" << r.p << ", s=" << r.s << ")\n";
  os << "case=" << r.tag.name() << " order=" << r.tag.order;
  if (r.tag.w) os << " w=" << r.tag.w;
  if (r.tag.w1) os << " w1=" << r.tag.w1 << " w2=" << r.tag.w2;
  os << "\n";
  if (r.params) {
    const CaseParams& p = *r.params;
    os << "params: tower_degree=" << p.tower_degree << " r=" << p.r;
    for (const auto& [k, v] : p.buckets) os << ' ' << k << '=' << v;
    for (const auto& [k, v] : p.m) os << ' ' << k << '=' << v;
    for (const auto& [k, v] : p.g) os << " g_" << k << '=' << v;
    for (const auto& [k, v] : p.l) os << " l_" << k << '=' << v;
    if (p.A) os << " A=" << *p.A;
    if (p.B) os << " B=" << *p.B;
    os << "\n";
  }
  os << "factors: " << r.factors.size() << " (" << r.source << ")\n";
  for (const auto& f : r.factors) {
    os << "  deg " << f.poly.degree() << " [" << f.form.at("kind").get<std::string>();
    if (f.form.contains("family")) os << ' ' << f.form.at("family").get<std::string>() << " t=" << f.form.at("t") << " u=" << f.form.at("u");
    if (f.form.contains("leader")) os << " leader=" << f.form.at("leader");
    os << "]: " << to_text(f.poly) << "\n";
  }
  os << "checks: product_ok=" << check_text(r.product_ok) << " all_irreducible=" << check_text(r.all_irreducible)
     << " count_formula=" << (r.count_formula ? to_string(*r.count_formula) : "n/a") << " coset_count=" << r.coset_count
     << " count_matches=" << (r.count_matches ? "true" : "false") << " oracle_agrees=" << check_text(r.oracle_agrees);
  if (!r.oracle_note.empty()) os << " (" << r.oracle_note << ")";
  os << "\n";
  if (timing) {
    os << "timing_ms:";
    for (const auto& [k, v] : r.timing_ms) os << ' ' << k << '=' << v;
    os << "\n";
  }
  return os.str();
}

std::vector<SweepRow> run_sweep(std::uint64_t n_max, const std::vector<Nat>& qs, Mode mode, const OracleBudget& budget) {
  std::vector<SweepRow> rows;
  for (const Nat& q : qs) {
    const PrimePowerForm pp = require_valid_pair(1, q);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (n % pp.p == 0) continue;
      SweepRow row;
      row.n = n;
      row.q = q;
      const CaseTag tag = classify(n, q);
      row.case_name = tag.name();
      row.oracle_count = count_by_cosets(n, q);
      std::optional<ClosedFormFactorization> closed;
      if (mode != Mode::Oracle && tag.supported()) {
        row.closed_count = count_closed_form(n, q);
        closed = std::get<ClosedFormFactorization>(factor_closed_form(n, q));
        row.agree = *row.closed_count == *row.oracle_count && Nat(closed->factors.size()) == *row.closed_count;
      }
      if (mode != Mode::Closed) {
        auto res = factor_by_cosets(n, q, budget);
        if (auto* of = std::get_if<OracleFactorization>(&res)) {
          row.agree = row.agree && Nat(of->factors.size()) == *row.oracle_count;
          if (closed) {
            std::vector<Poly> mine, theirs;
            for (const auto& f : closed->factors) mine.push_back(f.poly);
            for (const auto& f : of->factors) theirs.push_back(f.poly);
            row.agree = row.agree && same_multiset(mine, theirs);
          }
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,q,case,closed_count,oracle_count,agree\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.q << ',' << r.case_name << ',' << (r.closed_count ? to_string(*r.closed_count) : "") << ','
       << (r.oracle_count ? to_string(*r.oracle_count) : "") << ',' << (r.agree ? "true" : "false") << "\n";
  }
  return os.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", nat_json(r.n)},
                   {"q", nat_json(r.q)},
                   {"case", r.case_name},
                   {"closed_count", r.closed_count ? nat_json(*r.closed_count) : json(nullptr)},
                   {"oracle_count", r.oracle_count ? nat_json(*r.oracle_count) : json(nullptr)},
                   {"agree", r.agree}});
  }
  return arr;
}

}  // namespace xnf
