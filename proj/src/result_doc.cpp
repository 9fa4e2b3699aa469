#include "qsum/result_doc.hpp"

namespace qsum {

namespace {

std::string tuple_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

Json witness_json(const Obstruction& o, const VarNames& vars) {
  Json w;
  w["kind"] = to_string(o.kind);
  w["d"] = o.d.is_zero() ? Json() : Json(render(o.d, vars));
  w["j"] = o.j == 0 ? Json() : Json(o.j);
  const bool has_residue =
      o.kind == ObstructionKind::NonzeroMu || o.kind == ObstructionKind::NonzeroResidue;
  w["residue"] = has_residue ? Json(render(o.residue, vars)) : Json();
  if (o.relation) {
    Json rel;
    rel["t"] = o.relation->t;
    rel["ell"] = o.relation->ell;
    rel["v"] = o.relation->v;
    rel["m"] = o.relation->t;
    rel["n"] = o.relation->ell;
    w["relation"] = rel;
  } else {
    w["relation"] = Json();
  }
  w["description"] = describe(o, vars);
  return w;
}

}  // namespace

Json to_json(const ResultDoc& doc) {
  Json j;
  j["verdict"] = doc.verdict;
  j["certificate"] = doc.certificate;
  j["witness"] = doc.witness;
  j["echo"] = doc.echo;
  j["q"] = doc.q;
  return j;
}

std::string render_coset(const LatticeCoset& c) {
  if (c.empty) return "{}";
  std::string out = "{" + tuple_text(c.particular);
  for (const auto& b : c.basis) out += " + Z*" + tuple_text(b);
  return out + "}";
}

std::string describe(const Obstruction& o, const VarNames& vars) {
  switch (o.kind) {
    case ObstructionKind::NonzeroMu:
      return "NonzeroMu: the y-free part " + render(o.residue, vars) + " is not tau_x-summable";
    case ObstructionKind::NonzeroResidue:
      return "NonzeroResidue at d = " + render(o.d, vars) + ", j = " + std::to_string(o.j) +
             ": residue " + render(o.residue, vars);
    case ObstructionKind::NoShiftRelation:
      return "NoShiftRelation: no t != 0 with tau_x^t d = q^v tau_y^l d for d = " + render(o.d, vars);
    case ObstructionKind::QdeUnsolvable: {
      std::string s = "QdeUnsolvable at d = " + render(o.d, vars) + ", j = " + std::to_string(o.j);
      if (o.relation)
        s += " (tau_x^" + std::to_string(o.relation->t) + " d = q^" + std::to_string(o.relation->v) +
             " tau_y^" + std::to_string(o.relation->ell) + " d; equation parameters m = t = " +
             std::to_string(o.relation->t) + ", n = l = " + std::to_string(o.relation->ell) + ")";
      return s;
    }
  }
  return "unknown";
}

ResultDoc summability_doc(const RatFun& f, const SummabilityResult& r, const QParam& q,
                          const VarNames& vars) {
  ResultDoc doc;
  doc.echo = render(f, vars);
  doc.q = to_string(q.value());
  if (r.summable()) {
    doc.verdict = "summable";
    doc.certificate = Json{{"g", render(r.certificate().g, vars)}, {"h", render(r.certificate().h, vars)}};
  } else {
    doc.verdict = "not_summable";
    doc.witness = witness_json(r.obstruction(), vars);
  }
  return doc;
}

ResultDoc dispersion_doc(const std::string& echo, const LatticeCoset& c, const QParam& q) {
  ResultDoc doc;
  doc.echo = echo;
  doc.q = to_string(q.value());
  doc.verdict = c.empty ? "empty" : "nonempty";
  if (!c.empty) {
    Json basis = Json::array();
    for (const auto& b : c.basis) basis.push_back(b);
    doc.certificate = Json{{"particular", c.particular}, {"basis", basis}, {"text", render_coset(c)}};
  }
  return doc;
}

ResultDoc gosper_doc(const std::string& echo, const GosperTriple& t, const QParam& q) {
  ResultDoc doc;
  doc.echo = echo;
  doc.q = to_string(q.value());
  doc.verdict = "computed";
  doc.certificate = Json{{"A", render(t.A)}, {"B", render(t.B)}, {"C", render(t.C)}, {"m", t.m}};
  return doc;
}

ResultDoc qde_doc(const std::string& echo, const std::optional<RatFun>& p, const QParam& q) {
  ResultDoc doc;
  doc.echo = echo;
  doc.q = to_string(q.value());
  doc.verdict = p ? "solvable" : "unsolvable";
  if (p) doc.certificate = Json{{"p", render(*p)}};
  return doc;
}

ResultDoc verify_doc(const RatFun& f, const Certificate& c, bool ok, const QParam& q) {
  ResultDoc doc;
  doc.echo = render(f);
  doc.q = to_string(q.value());
  doc.verdict = ok ? "true" : "false";
  doc.certificate = Json{{"g", render(c.g)}, {"h", render(c.h)}};
  return doc;
}

}  // namespace qsum
