#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linkcc/bcr.hpp"
#include "linkcc/cabling.hpp"
#include "linkcc/count.hpp"
#include "linkcc/faces.hpp"
#include "linkcc/gadgets.hpp"
#include "linkcc/io.hpp"
#include "linkcc/reduction.hpp"
#include "linkcc/svg.hpp"
#include "linkcc/verify.hpp"

namespace {

using namespace linkcc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw FileError("cannot write " + out_path);
  out << text;
  if (!out) throw FileError("write failed: " + out_path);
}

UOrder parse_perm(const std::string& text, int n_u) {
  UOrder pi;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(field, &used);
    } catch (const std::exception&) {
      throw ParseError("bad --perm entry '" + field + "'");
    }
    if (used != field.size()) throw ParseError("bad --perm entry '" + field + "'");
    pi.position.push_back(value);
  }
  validate_order(pi, n_u);
  return pi;
}

LinkRecord record_of(const LabeledDiagram& g, const std::string& name) {
  LinkRecord r;
  r.name = name;
  r.diagram = g.diagram;
  r.labels = g.labels;
  return r;
}

template <typename Matrix>
void print_matrix(std::ostream& out, const std::vector<ComponentId>& ids, const Matrix& m) {
  out << "id";
  for (ComponentId id : ids) out << '\t' << id;
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << '\t' << m(i, j);
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkcc: link diagram gadgets, the crossing-number reduction and its checks"};
  app.require_subcommand(1);

  int chain_n = 4;
  int frame_k = 0, frame_l = 4;
  std::string instance_path, link_path, out_path, perm_text;

  auto* gen_chain = app.add_subcommand("gen-chain", "write the n-chain");
  gen_chain->add_option("--n", chain_n, "number of rings")->required();
  gen_chain->add_option("--out", out_path, "output file (default stdout)");

  auto* gen_frame = app.add_subcommand("gen-framework", "write the framework with k inner chains in an l-chain");
  gen_frame->add_option("--k", frame_k, "inner 4-chains")->required();
  gen_frame->add_option("--l", frame_l, "outer chain length")->required();
  gen_frame->add_option("--out", out_path, "output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "compile an instance into a weighted link");
  reduce->add_option("--instance", instance_path, "instance JSON")->required();
  reduce->add_option("--perm", perm_text, "U order as ranks, e.g. 2,1 (default identity)");
  reduce->add_option("--out", out_path, "output file (default stdout)");

  auto* cable_cmd = app.add_subcommand("cable", "replace each component by parallel copies");
  cable_cmd->add_option("--link", link_path, "weighted link file")->required();
  cable_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* inv = app.add_subcommand("invariants", "linking matrix, parity matrix, counts and genus");
  inv->add_option("--link", link_path, "link file")->required();

  auto* bcr_cmd = app.add_subcommand("bcr", "exact bipartite crossing minimum");
  bcr_cmd->add_option("--instance", instance_path, "instance JSON")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check both sides of the reduction on an instance");
  verify_cmd->add_option("--instance", instance_path, "instance JSON")->required();

  auto* render = app.add_subcommand("render", "draw a planar link as SVG");
  render->add_option("--link", link_path, "link file")->required();
  render->add_option("--out", out_path, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen_chain) {
      emit(serialize_link(record_of(make_chain(chain_n), "chain-" + std::to_string(chain_n))), out_path);
    } else if (*gen_frame) {
      const std::string name = "framework-" + std::to_string(frame_k) + "-" + std::to_string(frame_l);
      emit(serialize_link(record_of(make_framework(frame_k, frame_l), name)), out_path);
    } else if (*reduce) {
      const BipartiteInstance inst = parse_instance(read_file(instance_path));
      const UOrder pi = perm_text.empty() ? UOrder::identity(inst.n_u) : parse_perm(perm_text, inst.n_u);
      const CompiledLink compiled = build_link(inst, pi);
      LinkRecord r;
      r.name = "reduction";
      r.diagram = compiled.link.diagram;
      r.weights = compiled.link.weights;
      r.labels = compiled.labels;
      emit(serialize_link(r), out_path);
      const WeightPair w = compute_weights(inst.n_u);
      std::cerr << "components " << r.diagram.components.size() << " crossings " << crossing_count(r.diagram)
                << " w1 " << w.w1 << " w2 " << w.w2 << "\nweighted total "
                << to_decimal(weighted_crossing_count(compiled.link)) << " budget " << to_decimal(budget(inst))
                << " bipartite crossings " << crossings_for_order(inst, pi) << '\n';
    } else if (*cable_cmd) {
      const LinkRecord in = parse_link(read_file(link_path));
      const WeightedLink l{in.diagram, in.weights};
      const CableView view(l);
      if (view.crossing_count() > 5'000'000) {
        std::cerr << "cable has " << to_decimal(view.crossing_count()) << " crossings and "
                  << to_decimal(view.component_count()) << " components; too large to write\n";
        return kBadInput;
      }
      const CableResult c = cable(l);
      LinkRecord r;
      r.name = in.name + "-cable";
      r.diagram = c.diagram;
      emit(serialize_link(r), out_path);
      for (const auto& [copy, original] : c.alpha) std::cerr << "alpha " << copy << " -> " << original << '\n';
    } else if (*inv) {
      const LinkRecord in = parse_link(read_file(link_path));
      const WeightedLink l{in.diagram, in.weights};
      const auto lk = linking_matrix(in.diagram);
      std::cout << "components " << in.diagram.components.size() << '\n';
      std::cout << "crossings " << crossing_count(in.diagram) << '\n';
      std::cout << "weighted crossings " << to_decimal(weighted_crossing_count(l)) << '\n';
      std::cout << "genus " << genus(in.diagram) << '\n';
      std::cout << "linking matrix\n";
      print_matrix(std::cout, lk.ids, lk.entries);
      std::cout << "parity matrix\n";
      print_matrix(std::cout, lk.ids, parity_view(lk.entries).eval());
    } else if (*bcr_cmd) {
      const BipartiteInstance inst = parse_instance(read_file(instance_path));
      const BcrResult r = exact_bcr(inst);
      std::cout << "minimum " << r.minimum << "\norder";
      for (int u = 1; u <= inst.n_u; ++u) std::cout << ' ' << r.order.rank(u);
      std::cout << "\nbudget " << inst.budget << "\nwithin budget " << (r.minimum <= inst.budget ? "yes" : "no")
                << '\n';
    } else if (*verify_cmd) {
      const BipartiteInstance inst = parse_instance(read_file(instance_path));
      const VerificationReport r = verify_end_to_end(inst);
      std::cout << format_report(r);
      return r.pass ? kOk : kFailed;
    } else if (*render) {
      const LinkRecord in = parse_link(read_file(link_path));
      emit(render_svg(in.diagram, &in.labels), out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
