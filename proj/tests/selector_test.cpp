#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "readerkit/html.hpp"
#include "readerkit/selector.hpp"
#include "test_util.hpp"

using namespace readerkit;

namespace {

std::vector<const HtmlNode*> preorder(const HtmlNode& root) {
  std::vector<const HtmlNode*> out;
  for_each_preorder(root, [&](const HtmlNode& n) { out.push_back(&n); });
  return out;
}

// Brute force: test every element against the selector by walking its full
// ancestor chain recursively.
bool step_ok(const HtmlNode& n, const SelectorStep& st) {
  if (!n.is_element() || n.tag == kRootTag) return false;
  if (st.tag && *st.tag != n.tag) return false;
  if (st.id && (!n.attr("id") || *n.attr("id") != *st.id)) return false;
  for (const auto& c : st.classes) {
    const auto* cls = n.attr("class");
    if (!cls) return false;
    bool found = false;
    for (auto t : detail::split_ascii_whitespace(*cls)) found = found || t == c;
    if (!found) return false;
  }
  for (const auto& a : st.attributes) {
    const auto* v = n.attr(a.name);
    if (!v || (a.value && *v != *a.value)) return false;
  }
  return true;
}

bool chain_ok(const std::vector<const HtmlNode*>& anc, std::size_t upto, const Selector& s, std::size_t step) {
  // does some ancestor in anc[0, upto) match steps[0..step] as a chain?
  if (step == static_cast<std::size_t>(-1)) return true;
  for (std::size_t a = upto; a-- > 0;)
    if (step_ok(*anc[a], s.steps[step]) && chain_ok(anc, a, s, step - 1)) return true;
  return false;
}

void brute(const HtmlNode& n, const Selector& s, std::vector<const HtmlNode*>& anc, std::vector<const HtmlNode*>& out) {
  if (!n.is_element()) return;
  if (step_ok(n, s.steps.back()) && chain_ok(anc, anc.size(), s, s.steps.size() - 2)) out.push_back(&n);
  anc.push_back(&n);
  for (const auto& c : n.children) brute(c, s, anc, out);
  anc.pop_back();
}

}  // namespace

TEST(Selector, ParseForms) {
  const Selector s = Selector::parse("  DIV#main.a.b [data-x] a[href='/y'] ");
  ASSERT_EQ(s.steps.size(), 3u);
  EXPECT_EQ(*s.steps[0].tag, "div");
  EXPECT_EQ(*s.steps[0].id, "main");
  EXPECT_EQ(s.steps[0].classes, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(s.steps[1].tag);
  EXPECT_EQ(s.steps[1].attributes[0].name, "data-x");
  EXPECT_FALSE(s.steps[1].attributes[0].value);
  EXPECT_EQ(*s.steps[2].attributes[0].value, "/y");
  EXPECT_EQ(Selector::parse(s.to_string()), s);
}

TEST(Selector, ParseErrors) {
  for (const char* bad : {"", "   ", "div >", "a,b", ".", "#", "[x", "p:first", "#a#b", "[x='y]"})
    EXPECT_THROW(Selector::parse(bad), SelectorError) << bad;
}

TEST(Select, DescendantMatch) {
  const HtmlNode root = parse_html("<div class=\"x\"><p>a</p></div>");
  const auto hits = select(root, ".x p");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_TRUE(hits[0]->is_element("p"));
}

TEST(Select, EmptyDocument) { EXPECT_TRUE(select(parse_html(""), "p").empty()); }

TEST(Select, SelfClosingParagraphsInOrder) {
  const HtmlNode root = parse_html("<p id=\"a\"/><p id=\"b\"/>");
  const auto hits = select(root, "p");
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(*hits[0]->attr("id"), "a");
  EXPECT_EQ(*hits[1]->attr("id"), "b");
}

TEST(Select, CaseRules) {
  const HtmlNode root = parse_html("<DIV Class=\"Big\">x</DIV>");
  EXPECT_EQ(select(root, "div").size(), 1u);
  EXPECT_EQ(select(root, "DIV").size(), 1u);
  EXPECT_EQ(select(root, ".Big").size(), 1u);
  EXPECT_EQ(select(root, ".big").size(), 0u);
}

TEST(Select, MatchesBruteForceAndKeepsDocumentOrder) {
  std::mt19937_64 rng(31337);
  const std::vector<std::string> selectors = {"p", "div p", "div div", "li", "ul li", "ol li b", ".x", "#x", "[href]",
                                              "a[href='/y']", "td", "table td", "div span b", "[data-z]", "body p",
                                              "html body div", "em", "p b i"};
  for (int i = 0; i < 2000; ++i) {
    const HtmlNode root = parse_html(testutil::random_tag_soup(rng, 40));
    const auto order = preorder(root);
    const Selector sel = Selector::parse(testutil::choose(rng, selectors));
    const auto hits = select(root, sel);
    std::vector<const HtmlNode*> expect, anc;
    brute(root, sel, anc, expect);
    ASSERT_EQ(hits, expect) << sel.to_string();
    // subsequence of preorder
    std::size_t k = 0;
    for (const HtmlNode* n : order)
      if (k < hits.size() && hits[k] == n) ++k;
    EXPECT_EQ(k, hits.size());
  }
}
