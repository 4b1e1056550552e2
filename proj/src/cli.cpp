#include "sheaflab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sheaflab/catalog.hpp"

namespace sheaflab {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
  Poly p = Poly::parse(text, f, 4);
  if (p.is_zero()) return Scalar::zero(f);
  if (p.degree() != 0) throw UsageError("expected a constant, got '" + text + "'");
  return p.terms().front().second;
}

std::vector<int> parse_twists(const std::string& text) {
  std::vector<int> out;
  for (const auto& w : split(text, ',')) {
    try {
      out.push_back(std::stoi(w));
    } catch (const std::exception&) {
      throw UsageError("bad twist '" + w + "'");
    }
  }
  return out;
}

FreeComplex load(const CliConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  return read_complex_file(cfg.in);
}

void emit(const CliConfig& cfg, const FreeComplex& c, std::ostream& out) {
  if (cfg.out.empty()) {
    out << format_complex(c);
  } else {
    write_complex_file(cfg.out, c);
    out << "wrote " << cfg.out << ": " << c.shape() << "\n";
  }
}

SamplingConfig sampling(const CliConfig& cfg) { return SamplingConfig{cfg.seed, cfg.samples, cfg.exhaustive}; }

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    std::string a = text.substr(0, dots);
    std::string b = text.substr(dots + 2);
    int lo = std::stoi(a, &used_a);
    int hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw UsageError("bad range '" + text + "'");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string plane = "0,0,0,1";
  std::string generators;
  std::string form_f;
  std::string form_g;
  std::string attach_twists;
  std::string phi;

  CLI::App app{"Exact cohomology, Chern data, spectra and global generation for sheaves on P^3", "sheaflab"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool input) {
    sub->add_option("--field", cfg.field, "prime p or Q")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "number of sampled points")->capture_default_str();
    sub->add_flag("--exhaustive", cfg.exhaustive, "test every point over F_p, p <= 7");
    if (input) sub->add_option("--in", cfg.in, "complex file")->required();
    sub->add_option("--out", cfg.out, "output file");
  };
  auto* chern = app.add_subcommand("chern", "Chern data of the presented sheaf");
  common(chern, true);
  auto* coh = app.add_subcommand("coh", "cohomology table h^i(E(t))");
  common(coh, true);
  coh->add_option("--range", cfg.range, "twists a..b")->capture_default_str();
  auto* spectrum = app.add_subcommand("spectrum", "spectrum of a rank 3 bundle with c1 = -1");
  common(spectrum, true);
  auto* validate_cmd = app.add_subcommand("validate", "check that the complex is exact away from its cohomology position");
  common(validate_cmd, true);
  auto* gg = app.add_subcommand("gg", "global generation of E(t)");
  common(gg, true);
  gg->add_option("--twist", cfg.twist, "twist t")->capture_default_str();
  auto* dual = app.add_subcommand("dual", "dual complex");
  common(dual, true);
  auto* restrict_cmd = app.add_subcommand("restrict", "restriction to a plane");
  common(restrict_cmd, true);
  restrict_cmd->add_option("--plane", plane, "plane coefficients a,b,c,d")->capture_default_str();
  auto* liaison = app.add_subcommand("liaison", "monad of the linked ideal sheaf");
  common(liaison, false);
  liaison->add_option("--item", cfg.item, "built-in input 1 or 2 (used when --in is absent)");
  liaison->add_option("--in", cfg.in, "resolution A2 -> A1 -> A0 with cohomology at position 0");
  liaison->add_option("--generators", generators, "generators of the ideal, separated by ';'");
  liaison->add_option("--f", form_f, "first form of the complete intersection");
  liaison->add_option("--g", form_g, "second form of the complete intersection");
  auto* attach = app.add_subcommand("attach", "add A to the middle term with left map (d; phi)");
  common(attach, true);
  attach->add_option("--twists", attach_twists, "twists of A, comma separated")->required();
  attach->add_option("--phi", phi, "entries of phi row by row, separated by ';'")->required();
  auto* paper = app.add_subcommand("paper", "verify one catalog item");
  common(paper, false);
  paper->add_option("--item", cfg.item, "catalog id")->required();
  auto* paper_all = app.add_subcommand("paper-all", "verify every catalog item");
  common(paper_all, false);

  std::vector<std::string> argv_store{"sheaflab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    FieldSpec field = FieldSpec::parse(cfg.field);
    if (*chern) {
      FreeComplex c = load(cfg);
      if (c.nvars() == 3) {
        out << chern_of_p2(c).to_string() << "\n";
      } else {
        out << chern_of(c).to_string() << "\n";
      }
      return 0;
    }
    if (*coh) {
      FreeComplex c = load(cfg);
      auto [lo, hi] = parse_range(cfg.range);
      out << "# h^i(E(t)) for " << c.shape() << " over " << c.field().to_string() << "\n";
      out << h_table(c, lo, hi).to_text();
      return 0;
    }
    if (*spectrum) {
      FreeComplex c = load(cfg);
      SpectrumReport r = spectrum_of(c);
      out << r.label() << "\n";
      auto violations = validate_spectrum(r.spectrum, chern_of(c).c3);
      for (const auto& v : violations) out << "violates (" << v.property << "): " << v.message << "\n";
      return violations.empty() ? 0 : 1;
    }
    if (*validate_cmd) {
      ValidityReport r = validate(load(cfg), sampling(cfg));
      out << r.to_string();
      return r.ok() ? 0 : 1;
    }
    if (*gg) {
      GgVerdict v = is_globally_generated(load(cfg), cfg.twist, sampling(cfg));
      out << "twist " << cfg.twist << ": " << v.to_string() << "\n";
      return v.positive() ? 0 : 1;
    }
    if (*dual) {
      emit(cfg, dualize(load(cfg)), out);
      return 0;
    }
    if (*restrict_cmd) {
      FreeComplex c = load(cfg);
      ScalarVector h;
      for (const auto& w : split(plane, ',')) h.push_back(parse_scalar(w, c.field()));
      if (h.size() != 4) throw UsageError("--plane needs four coefficients");
      emit(cfg, restrict_plane(c, h), out);
      return 0;
    }
    if (*liaison) {
      FreeComplex m = [&] {
        if (cfg.in.empty()) {
          if (cfg.item != "1" && cfg.item != "2") throw UsageError("liaison needs --in or --item 1|2");
          LiaisonInput li = liaison_input(std::stoi(cfg.item), field, cfg.seed);
          out << "# built-in input " << cfg.item << " seed " << cfg.seed << ", linked curve degree " << li.linked.deg
              << " chi " << li.linked.chi << "\n";
          return ferrand_transfer(li.resolution, li.a, li.b, li.f, li.g);
        }
        FreeComplex r = read_complex_file(cfg.in);
        std::vector<Poly> gens;
        for (const auto& g : split(generators, ';')) gens.push_back(Poly::parse(g, r.field(), r.nvars()));
        if (form_f.empty() || form_g.empty()) throw UsageError("liaison with --in needs --f and --g");
        Poly f = Poly::parse(form_f, r.field(), r.nvars());
        Poly g = Poly::parse(form_g, r.field(), r.nvars());
        return ferrand_transfer(CurveResolution(r, gens), f.degree(), g.degree(), f, g);
      }();
      emit(cfg, m, out);
      return 0;
    }
    if (*attach) {
      FreeComplex c = load(cfg);
      FreeTerm a(parse_twists(attach_twists));
      const int cp = c.coh_pos();
      FreeTerm source = cp > c.pmin() ? c.term(cp - 1) : FreeTerm();
      std::vector<Poly> entries;
      for (const auto& e : split(phi, ';')) entries.push_back(Poly::parse(e, c.field(), c.nvars()));
      emit(cfg, attach_extension(c, a, GradedMap(source, a, entries, c.field(), c.nvars())), out);
      return 0;
    }
    if (*paper) {
      VerifyReport r = verify(cfg.item, field, cfg.seed, cfg.samples);
      out << r.to_text();
      err << "runtime " << r.seconds << " s\n";
      return r.passed() ? 0 : 1;
    }
    if (*paper_all) {
      int failed = 0;
      for (const auto& e : catalog()) {
        VerifyReport r = verify(e.id, field, cfg.seed, cfg.samples);
        out << r.to_text();
        if (!r.passed()) ++failed;
      }
      out << "# " << catalog().size() - static_cast<std::size_t>(failed) << " of " << catalog().size()
          << " items pass\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sheaflab
