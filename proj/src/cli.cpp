#include "odac/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "odac/certificate.hpp"

namespace odac {

namespace {

bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

Decomposition construct_by_args(const std::string& algebra, std::size_t size,
                                const RingPtr& ring) {
  if (algebra == "sl") {
    if (!is_pow2(size)) fail("unsupported-size", "sl construction needs size 2^(m+1)");
    unsigned m = 0;
    while ((std::size_t(1) << (m + 1)) < size) ++m;
    return construct_sl_pauli(m, ring);
  }
  if (algebra == "sp") {
    if (!is_pow2(size) || size < 4)
      fail("unsupported-size", "sp construction needs size 2^(m+1), m >= 1");
    unsigned m = 0;
    while ((std::size_t(1) << (m + 1)) < size) ++m;
    return construct_sp_restricted(m, ring);
  }
  if (algebra == "so") {
    if (size < 3) fail("unsupported-size", "so construction needs size >= 3");
    if (size % 2 == 0) return construct_so_even(size / 2, ring);
    return construct_so_odd((size + 1) / 2, ring);
  }
  fail("unsupported-family", "constructions exist for sl, sp, so");
}

int cmd_construct(const std::string& algebra, std::size_t size, const std::string& ring_desc,
                  const std::string& out_file, std::ostream& out) {
  Decomposition d = construct_by_args(algebra, size, parse_ring(ring_desc));
  std::string text = certificate_text(make_certificate(d));
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) fail("io-error", "cannot open output file: " + out_file);
    f << text;
  }
  return 0;
}

int cmd_verify(const std::string& cert_file, const std::string& killing, std::ostream& out) {
  std::ifstream f(cert_file, std::ios::binary);
  if (!f) fail("io-error", "cannot open certificate: " + cert_file);
  std::stringstream buf;
  buf << f.rdbuf();
  Certificate cert = parse_certificate(buf.str());
  Decomposition d = to_decomposition(cert);
  StructureConstants sc(d.algebra);
  KillingKind kind = killing == "closed" ? KillingKind::Closed : KillingKind::Generic;
  OdacReport report = verify_odac(d.components, sc, kind);
  if (report.is_odac) {
    out << "ok: decomposition verified (" << d.components.size() << " components, rank "
        << d.algebra.rank() << ", killing " << killing << ")\n";
    return 0;
  }
  for (const auto& fmsg : report.failures) out << fmsg.detail << "\n";
  return 1;
}

int cmd_ring(const std::string& descriptor, std::ostream& out) {
  RingPtr ring = parse_ring(descriptor);
  LocalFactorization lf = decompose_local(ring);
  out << "ring: " << ring->descriptor() << "\n";
  out << "characteristic: " << ring->characteristic() << "\n";
  out << "size: " << ring->size() << "\n";
  out << "local factors:";
  for (const auto& f : lf.factors()) out << " " << f->descriptor();
  out << "\n";
  return 0;
}

int cmd_check_sl(std::size_t n, const std::string& ring_desc, std::ostream& out) {
  SlNecessaryCheck res = necessary_check_sl(n, parse_ring(ring_desc));
  if (res.pass) {
    out << "necessary condition satisfied (existence not implied)\n";
    return 0;
  }
  out << "necessary condition fails: gcd(char=" << parse_ring(ring_desc)->characteristic()
      << ", n=" << n << ") = " << res.gcd << "\n";
  out << "witness: " << res.witness_scalar << "*I_" << n << " over "
      << res.factor->descriptor() << " (local factor " << res.factor_index << ")\n";
  return 1;
}

int cmd_enumq(unsigned m, bool allow_large, std::ostream& out) {
  BinaryField field(m, allow_large);
  SympBasis basis(field);
  std::vector<SympVector> q = enumerate_Q(basis);
  auto omegas = omega_partition(basis);
  auto lines = all_line_indices(field);

  auto omega_of = [&](SympVector w) {
    for (std::size_t j = 0; j < omegas.size(); ++j)
      for (SympVector v : omegas[j])
        if (v == w) return j;
    return omegas.size();
  };
  auto line_of = [&](SympVector w) {
    if (w.alpha == 0) return LineIndex::infinity();
    return LineIndex::at(field.mul(w.beta, field.pow(w.alpha, field.size() - 2)));
  };

  for (SympVector w : q) {
    SympBasis::Coords c = basis.coords(w);
    std::string coord_bits;
    for (unsigned i = 0; i < field.degree(); ++i) coord_bits += char('0' + ((c.a >> i) & 1));
    for (unsigned i = 0; i < field.degree(); ++i) coord_bits += char('0' + ((c.b >> i) & 1));
    out << to_string(field, w) << " coords=" << coord_bits << " omega=" << omega_of(w)
        << " line=" << line_of(w).str(field) << "\n";
  }
  out << "omega sizes:";
  for (const auto& o : omegas) out << " " << o.size();
  out << "\n";
  out << "line sizes:";
  for (LineIndex alpha : lines) out << " " << line_Q(basis, alpha).size();
  out << "\n";
  out << "|Q| = " << q.size() << " = 2^" << m << "(2^" << (m + 1) << "+1)\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"construct and verify orthogonal decompositions into abelian Cartan "
               "subalgebras of classical Lie algebras over finite commutative rings"};
  app.require_subcommand(1);

  std::string algebra, ring_desc, out_file, cert_file, killing = "generic";
  std::size_t size = 0, n = 0;
  unsigned m = 0;
  bool allow_large = false;

  CLI::App* construct = app.add_subcommand("construct", "construct a decomposition certificate");
  construct->add_option("--algebra", algebra, "sl, sp or so")->required();
  construct->add_option("--size", size, "matrix size")->required();
  construct->add_option("--ring", ring_desc, "ring descriptor, e.g. Z5 or GF(3^2)")->required();
  construct->add_option("--out", out_file, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "verify a decomposition certificate");
  verify->add_option("cert", cert_file, "certificate file")->required();
  verify->add_option("--killing", killing, "generic (default) or closed")
      ->check(CLI::IsMember({"generic", "closed"}));

  CLI::App* ring = app.add_subcommand("ring", "local factorization and characteristic");
  ring->add_option("descriptor", ring_desc, "ring descriptor")->required();

  CLI::App* check = app.add_subcommand("check-sl", "necessary condition for sl_n");
  check->add_option("--n", n, "matrix size")->required();
  check->add_option("--ring", ring_desc, "ring descriptor")->required();

  CLI::App* enumq = app.add_subcommand("enumq", "enumerate the quadric Q");
  enumq->add_option("--m", m, "field degree parameter (F_{2^(m+1)})")->required();
  enumq->add_flag("--allow-large-m", allow_large, "lift the m <= 6 cap");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(algebra, size, ring_desc, out_file, out);
    if (verify->parsed()) return cmd_verify(cert_file, killing, out);
    if (ring->parsed()) return cmd_ring(ring_desc, out);
    if (check->parsed()) return cmd_check_sl(n, ring_desc, out);
    if (enumq->parsed()) return cmd_enumq(m, allow_large, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
  err << "error: usage: no subcommand\n";
  return 2;
}

}  // namespace odac
