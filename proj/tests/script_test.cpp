#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "reveng/script.hpp"

using namespace reveng;

namespace {

std::string bundled(std::string const& name) {
  std::ifstream in(std::string(REVENG_SCRIPTS_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void expect_error(std::string const& text, std::size_t line, std::string const& fragment) {
  try {
    parse_script(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (SyntaxError const& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(e.message().find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Script, BundledSym2Script) {
  auto s = parse_script(bundled("fake_cp2_3.srg"));
  EXPECT_EQ(s.manifold.kind, ManifoldDecl::Kind::Sym2);
  EXPECT_EQ(s.alphabet.size(), 6u);
  EXPECT_EQ(s.relators.size(), 9u);
  EXPECT_EQ(s.tori.size(), 6u);
  EXPECT_EQ(s.surgeries.size(), 6u);
  EXPECT_FALSE(s.has_family_hole());
  ASSERT_TRUE(s.lattice);
  EXPECT_EQ(s.lattice->names.size(), 4u);
  EXPECT_EQ(s.sw.basics.size(), 2u);
  EXPECT_EQ(s.sw.scenarios.size(), 2u);
  EXPECT_EQ(s.expect_pi1, Pi1Expectation::Trivial);
}

TEST(Script, BundledProductScript) {
  auto s = parse_script(bundled("homology_s2xs2.srg"));
  EXPECT_EQ(s.manifold.kind, ManifoldDecl::Kind::Product);
  EXPECT_EQ(s.alphabet.size(), 8u);
  EXPECT_EQ(s.relators.size(), 10u);
  EXPECT_EQ(s.surgeries.size(), 8u);
  EXPECT_EQ(s.surgeries[4].m.at(0), 1);
  EXPECT_EQ(s.expect_pi1, Pi1Expectation::Open);
}

TEST(Script, FamilyHole) {
  auto s = parse_script(bundled("fake_cp2_3_family.srg"));
  ASSERT_TRUE(s.has_family_hole());
  EXPECT_EQ(s.surgeries.back().m.at(4), 5);
  EXPECT_EQ(s.family, (IntRange{2, 10}));
}

TEST(Script, PrettyPrintRoundTrips) {
  for (auto const* name : {"fake_cp2_3.srg", "fake_cp2_3_family.srg", "homology_s2xs2.srg"}) {
    auto s = parse_script(bundled(name));
    auto text = to_text(s);
    EXPECT_EQ(parse_script(text), s) << name;
    EXPECT_EQ(to_text(parse_script(text)), text) << name;
  }
  auto custom = parse_script("manifold custom e=4 sign=0\ngenerators x y\nrelator [x,y]\n"
                             "torus T g1=x g2=y mu=[x,y]\nsurgery T curve=g1 m=-2*(n-1) sign=-1\nfamily 1..3\n");
  EXPECT_EQ(custom.surgeries[0].m.value, (AffineExponent{-2, 2}));
  EXPECT_EQ(parse_script(to_text(custom)), custom);
}

TEST(Script, AffineCoefficients) {
  auto coeff = [](std::string const& m) {
    return parse_script("manifold sym2 2\ntorus T g1=a1 g2=a2 mu=[b1,b2]\nsurgery T curve=g1 m=" + m + "\nfamily 1..2\n")
        .surgeries[0]
        .m;
  };
  EXPECT_EQ(coeff("n+1").value, (AffineExponent{1, 1}));
  EXPECT_EQ(coeff("-n-1").value, (AffineExponent{-1, -1}));
  EXPECT_EQ(coeff("2n").value, (AffineExponent{2, 0}));
  EXPECT_EQ(coeff("3 * n - 4").value, (AffineExponent{3, -4}));
  EXPECT_FALSE(coeff("-7").hole);
  EXPECT_EQ(coeff("-7").at(100), -7);
}

TEST(Script, CommentsAndModelGenerators) {
  auto s = parse_script("# heading\nmanifold sym2 3   # model\n\nrelator [a1, b1]\n");
  EXPECT_FALSE(s.explicit_generators);
  EXPECT_EQ(s.alphabet.size(), 6u);
  EXPECT_EQ(s.relators.size(), 1u);
}

TEST(Script, Errors) {
  expect_error("", 1, "missing manifold declaration");
  expect_error("# only a comment\n", 1, "missing manifold declaration");
  expect_error("manifold sym2 3\nmanifold sym2 4\n", 2, "second manifold");
  expect_error("manifold torus 3\n", 1, "unknown manifold kind");
  expect_error("manifold sym2 x\n", 1, "expected an integer");
  expect_error("manifold sym2 3\nrelator a1 zz\n", 2, "unresolved generator 'zz'");
  expect_error("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=1\ntorus T g1=a1 g2=a2 mu=1\n", 3, "duplicate torus");
  expect_error("manifold sym2 3\nsurgery X curve=g1 m=1\n", 2, "unresolved torus");
  expect_error("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=1\nsurgery T curve=g1 m=1\nsurgery T curve=g2 m=1\n", 4,
               "surgered twice");
  expect_error("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=1\ntorus U g1=a1 g2=a2 mu=1\n"
               "surgery T curve=g1 m=n\nsurgery U curve=g1 m=n+1\n",
               5, "multiple family holes");
  expect_error("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=1\nsurgery T curve=g3 m=1\n", 3, "curve must be g1 or g2");
  expect_error("manifold sym2 3\ntorus T g1=a1 g2=a2 mu=1\nsurgery T curve=g1 m=n*n\n", 3, "affine");
  expect_error("manifold sym2 3\ntorus T g1=a1 mu=1\n", 2, "missing 'g2='");
  expect_error("manifold sym2 3\ntorus T g1=a1 g1=a2 g2=a1 mu=1\n", 2, "repeated key");
  expect_error("manifold sym2 3\nfrobnicate\n", 2, "unknown directive");
  expect_error("manifold sym2 3\nlattice x y Q=1,0;0\n", 2, "not square");
  expect_error("manifold sym2 3\nlattice x y Q=1,0;0,1\nsurface S genus=1 square=0 vector=1,0,0\n", 1,
               "coordinates");
  expect_error("manifold sym2 3\nsw basic 1,x value=1\n", 2, "bad vector entry");
  expect_error("manifold sym2 3\nexpect pi1=maybe\n", 2, "trivial or open");
  expect_error("manifold sym2 3\nfamily 5..2\n", 2, "");
}

TEST(PresentationFile, Parses) {
  auto f = parse_presentation_file("generators a b\nrelator a^2\nrelator b^3\nrelator (a b)^5\nsubgroup a\n");
  EXPECT_EQ(f.presentation.num_generators(), 2u);
  EXPECT_EQ(f.presentation.relators().size(), 3u);
  EXPECT_EQ(f.subgroup.size(), 1u);
  EXPECT_THROW(parse_presentation_file("relator a\n"), SyntaxError);
  EXPECT_THROW(parse_presentation_file("generators a\nrelator b\n"), SyntaxError);
}
