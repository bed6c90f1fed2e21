#include "linkcc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "linkcc/cabling.hpp"
#include "linkcc/faces.hpp"

namespace linkcc {

namespace {

std::string order_text(const UOrder& pi) {
  std::string s;
  for (std::size_t i = 0; i < pi.position.size(); ++i) s += (i ? "," : "") + std::to_string(pi.position[i]);
  return s;
}

// Cabling preserves the weighted total and pulls back every linking number along alpha.
void check_cabling(const CompiledLink& c, VerificationReport& r) {
  const CableView view(c.link);
  r.cable_count_match = view.crossing_count() == weighted_crossing_count(c.link);
  const auto lk = linking_matrix(c.link.diagram);
  bool ok = true;
  for (std::size_t i = 0; i < lk.ids.size() && ok; ++i) {
    const ComponentId ki = lk.ids[i];
    const Weight wi = c.link.weight(ki);
    if (wi > 1) ok = view.mutual_crossings(view.copy_id(ki, 1), view.copy_id(ki, wi)) == 0 &&
                     view.linking_number(view.copy_id(ki, 1), view.copy_id(ki, wi)) == 0;
    for (std::size_t j = i + 1; j < lk.ids.size() && ok; ++j) {
      const ComponentId kj = lk.ids[j];
      const std::int64_t copy = view.linking_number(view.copy_id(ki, wi), view.copy_id(kj, 1));
      ok = copy == lk.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  r.cable_linking_match = ok;
}

}  // namespace

std::string VerificationReport::equivalence() const {
  if (link_side && bipartite_side) return "both sides true";
  if (!link_side && !bipartite_side) return "both sides false";
  return link_side ? "link side true, bipartite side false" : "link side false, bipartite side true";
}

VerificationReport verify_end_to_end(const BipartiteInstance& inst) {
  validate_instance(inst);
  VerificationReport r;
  r.instance = inst;
  r.weights = compute_weights(inst.n_u);
  r.budget = budget(inst);
  BipartiteInstance base = inst;
  base.budget = 0;
  const Count k0 = budget(base);

  std::vector<int> seq(static_cast<std::size_t>(inst.n_u));
  for (int i = 0; i < inst.n_u; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  bool all_match = true;
  r.diagrams_planar = true;
  bool first = true;
  do {
    UOrder pi{seq};
    PermutationRow row;
    row.pi = pi;
    row.crossings = crossings_for_order(inst, pi);
    const CompiledLink c = build_link(inst, pi);
    row.diagram_total = weighted_crossing_count(c.link);
    row.formula_total = k0 + 4 * static_cast<Count>(row.crossings);
    row.match = row.diagram_total == row.formula_total;
    all_match = all_match && row.match;
    r.diagrams_planar = r.diagrams_planar && genus(c.link.diagram) == 0;
    r.min_total = first ? row.diagram_total : std::min(r.min_total, row.diagram_total);
    first = false;
    r.rows.push_back(std::move(row));
  } while (std::next_permutation(seq.begin(), seq.end()));

  r.bcr = exact_bcr(inst);
  r.link_side = r.min_total <= r.budget;
  r.bipartite_side = r.bcr.minimum <= inst.budget;
  check_cabling(build_link(inst, r.bcr.order), r);
  r.pass = all_match && r.link_side == r.bipartite_side && r.diagrams_planar && r.cable_count_match &&
           r.cable_linking_match;
  return r;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "instance: n_u=" << r.instance.n_u << " n_v=" << r.instance.n_v() << " budget=" << r.instance.budget
      << " assignment=";
  for (std::size_t i = 0; i < r.instance.assignment.size(); ++i) out << (i ? "," : "") << r.instance.assignment[i];
  out << "\nweights: w1=" << r.weights.w1 << " w2=" << r.weights.w2 << "\n";
  out << "k': " << to_decimal(r.budget) << "\n";
  out << "pi\tcr\tdiagram\tformula\tmatch\n";
  for (const auto& row : r.rows)
    out << order_text(row.pi) << '\t' << row.crossings << '\t' << to_decimal(row.diagram_total) << '\t'
        << to_decimal(row.formula_total) << '\t' << (row.match ? "yes" : "NO") << '\n';
  out << "bcr: " << r.bcr.minimum << " at pi=" << order_text(r.bcr.order) << "\n";
  out << "min diagram total: " << to_decimal(r.min_total) << "\n";
  out << "equivalence: " << r.equivalence() << "\n";
  out << "planar diagrams: " << (r.diagrams_planar ? "yes" : "NO") << "\n";
  out << "cable crossing count: " << (r.cable_count_match ? "match" : "MISMATCH") << "\n";
  out << "cable linking numbers: " << (r.cable_linking_match ? "match" : "MISMATCH") << "\n";
  out << "verdict: " << (r.pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace linkcc
