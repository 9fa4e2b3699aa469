#pragma once

#include <json.hpp>
#include <string>

#include "qsum/expr.hpp"
#include "qsum/lattice.hpp"
#include "qsum/qde.hpp"
#include "qsum/summability.hpp"

namespace qsum {

using Json = nlohmann::ordered_json;

/// Output of one CLI run. The JSON form always has exactly the keys
/// verdict, certificate, witness, echo and q; absent parts are null.
struct ResultDoc {
  std::string verdict;
  Json certificate;
  Json witness;
  std::string echo;
  std::string q;
};

Json to_json(const ResultDoc& doc);

std::string render_coset(const LatticeCoset& c);

/// One line such as "QdeUnsolvable at d = x + y, j = 1 (...)".
std::string describe(const Obstruction& o, const VarNames& vars = kDefaultVars);

ResultDoc summability_doc(const RatFun& f, const SummabilityResult& r, const QParam& q,
                          const VarNames& vars = kDefaultVars);
ResultDoc dispersion_doc(const std::string& echo, const LatticeCoset& c, const QParam& q);
ResultDoc gosper_doc(const std::string& echo, const GosperTriple& t, const QParam& q);
ResultDoc qde_doc(const std::string& echo, const std::optional<RatFun>& p, const QParam& q);
ResultDoc verify_doc(const RatFun& f, const Certificate& c, bool ok, const QParam& q);

}  // namespace qsum
