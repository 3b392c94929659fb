#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "readerkit/html.hpp"
#include "readerkit/selector.hpp"
#include "test_util.hpp"

using namespace readerkit;

namespace {

const HtmlNode& only_child(const HtmlNode& n) {
  EXPECT_EQ(n.children.size(), 1u);
  return n.children.at(0);
}

// Naive oracle: recursive concatenation, then collapse.
void concat_text(const HtmlNode& n, std::string& out) {
  if (n.kind == NodeKind::Text) out += n.text;
  if (n.kind != NodeKind::Element) return;
  for (const auto& c : n.children) concat_text(c, out);
}

std::string oracle_inner_text(const HtmlNode& n) {
  std::string raw;
  concat_text(n, raw);
  std::string out;
  for (char c : raw) {
    const bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
    if (ws) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

void check_structural_invariants(const HtmlNode& n, std::size_t depth = 0) {
  ASSERT_LE(depth, kMaxNestingDepth + 1);
  if (n.kind != NodeKind::Element) {
    EXPECT_TRUE(n.children.empty());
    return;
  }
  for (char c : n.tag) EXPECT_FALSE(c >= 'A' && c <= 'Z') << n.tag;
  for (const auto& a : n.attrs)
    for (char c : a.name) EXPECT_FALSE(c >= 'A' && c <= 'Z') << a.name;
  if (is_void_element(n.tag)) EXPECT_TRUE(n.children.empty()) << n.tag;
  for (const auto& c : n.children) {
    if (c.kind == NodeKind::RawText) {
      EXPECT_TRUE(n.tag == "script" || n.tag == "style") << n.tag;
      EXPECT_EQ(n.children.size(), 1u);
    }
    check_structural_invariants(c, depth + 1);
  }
}

}  // namespace

TEST(ParseHtml, WellFormedHeading) {
  const HtmlNode root = parse_html("<h1>Title</h1>");
  EXPECT_EQ(root.tag, kRootTag);
  const HtmlNode& h1 = only_child(root);
  EXPECT_TRUE(h1.is_element("h1"));
  const HtmlNode& t = only_child(h1);
  EXPECT_EQ(t.kind, NodeKind::Text);
  EXPECT_EQ(t.text, "Title");
}

TEST(ParseHtml, ParagraphImplicitClose) {
  const HtmlNode root = parse_html("<p>a<p>b");
  ASSERT_EQ(root.children.size(), 2u);
  EXPECT_TRUE(root.children[0].is_element("p"));
  EXPECT_TRUE(root.children[1].is_element("p"));
  EXPECT_EQ(inner_text(root.children[0]), "a");
  EXPECT_EQ(inner_text(root.children[1]), "b");
}

TEST(ParseHtml, ScriptBodyIsRawText) {
  const HtmlNode root = parse_html("<script>if(a<b){}</script>");
  const HtmlNode& script = only_child(root);
  EXPECT_TRUE(script.is_element("script"));
  const HtmlNode& body = only_child(script);
  EXPECT_EQ(body.kind, NodeKind::RawText);
  EXPECT_EQ(body.text, "if(a<b){}");
}

TEST(ParseHtml, StyleEndTagCaseInsensitive) {
  const HtmlNode root = parse_html("<style>p{}</STYLE><p>x</p>");
  ASSERT_EQ(root.children.size(), 2u);
  EXPECT_EQ(only_child(root.children[0]).text, "p{}");
}

TEST(ParseHtml, ListItemsAndTableCellsAutoClose) {
  const HtmlNode ul = only_child(parse_html("<ul><li>a<li>b<li>c</ul>"));
  EXPECT_EQ(ul.children.size(), 3u);
  const HtmlNode table = only_child(parse_html("<table><tr><td>1<td>2<tr><td>3</table>"));
  const auto rows = select(table, "tr");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]->children.size(), 2u);
  EXPECT_EQ(rows[1]->children.size(), 1u);
}

TEST(ParseHtml, StrayCloseTagsDropped) {
  const HtmlNode root = parse_html("</div>a</span><b>c</b></p>");
  EXPECT_EQ(inner_text(root), "ac");
  EXPECT_EQ(count_elements(root), 2u);  // root and b
}

TEST(ParseHtml, UppercaseTagsAndAttributesLowered) {
  const HtmlNode div = only_child(parse_html("<DIV CLASS=Box Data-X='1'>t</DIV>"));
  EXPECT_EQ(div.tag, "div");
  ASSERT_EQ(div.attrs.size(), 2u);
  EXPECT_EQ(div.attrs[0].name, "class");
  EXPECT_EQ(div.attrs[0].value, "Box");
  EXPECT_EQ(div.attrs[1].name, "data-x");
}

TEST(ParseHtml, VoidElementsHaveNoChildren) {
  const HtmlNode root = parse_html("<p>a<br>b<img src=x>c</img><hr/>d");
  for_each_preorder(root, [](const HtmlNode& n) {
    if (n.is_element() && is_void_element(n.tag)) EXPECT_TRUE(n.children.empty());
  });
  EXPECT_EQ(inner_text(root), "abcd");
}

TEST(ParseHtml, EntitiesLimitedSet) {
  const HtmlNode root = parse_html("<p>&amp;&lt;&gt;&quot;&apos;&#65;&#x42;&copy;&amp</p>");
  EXPECT_EQ(inner_text(root), "&<>\"'AB&copy;&amp");
  const HtmlNode nb = parse_html("a&nbsp;b");
  EXPECT_EQ(nb.children.at(0).text, "a\xC2\xA0" "b");
}

TEST(ParseHtml, CommentsKeptButExcludedFromText) {
  const HtmlNode root = parse_html("a<!-- hidden -->b");
  ASSERT_EQ(root.children.size(), 3u);
  EXPECT_EQ(root.children[1].kind, NodeKind::Comment);
  EXPECT_EQ(inner_text(root), "ab");
  EXPECT_EQ(inner_text(root.children[1]), "");
}

TEST(ParseHtml, IframeContentDropped) {
  const HtmlNode root = parse_html("<iframe><p>inside</p></iframe><p>out</p>");
  EXPECT_EQ(inner_text(root), "out");
}

TEST(ParseHtml, InvalidUtf8Replaced) {
  const HtmlNode root = parse_html(std::string("a\xFF" "b"));
  EXPECT_EQ(inner_text(root), "a\xEF\xBF\xBD" "b");
}

TEST(ParseHtml, MetaCharsetTranscodes) {
  // "café" in ISO-8859-1
  const std::string latin1 = "<meta charset=\"iso-8859-1\"><p>caf\xE9</p>";
  EXPECT_EQ(inner_text(parse_html(latin1)), "caf\xC3\xA9");
  // the hint overrides the declaration
  EXPECT_EQ(inner_text(parse_html("<meta charset=\"windows-1252\"><p>x</p>", "utf-8")), "x");
}

TEST(ParseHtml, DeepNestingCapped) {
  std::string s;
  for (int i = 0; i < 5000; ++i) s += "<div>";
  s += "deep";
  const HtmlNode root = parse_html(s);
  check_structural_invariants(root);
  EXPECT_EQ(inner_text(root), "deep");
}

TEST(InnerText, CollapseExample) {
  HtmlNode p = HtmlNode::element("p");
  p.children.push_back(HtmlNode::make_text(" a "));
  HtmlNode b = HtmlNode::element("b");
  b.children.push_back(HtmlNode::make_text("b"));
  p.children.push_back(std::move(b));
  EXPECT_EQ(inner_text(p), "a b");
  EXPECT_EQ(inner_text(HtmlNode::make_comment("c")), "");
  EXPECT_EQ(inner_text(HtmlNode::make_text("x")), "x");
}

TEST(ParseHtml, FuzzRandomBytesNeverAbort) {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 10000; ++iter) {
    const std::string input = iter % 2 == 0 ? testutil::random_bytes(rng, 200) : testutil::random_tag_soup(rng, 40);
    const HtmlNode root = parse_html(input);
    check_structural_invariants(root);
    const std::string text = inner_text(root);
    EXPECT_EQ(text.find("  "), std::string::npos);
    EXPECT_EQ(text.find('\t'), std::string::npos);
    EXPECT_EQ(text.find('\n'), std::string::npos);
    ASSERT_EQ(text, oracle_inner_text(root)) << testutil::printable(input);
  }
}

TEST(SerializeHtml, RoundTripIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::string input = iter % 3 == 0 ? testutil::random_bytes(rng, 120) : testutil::random_tag_soup(rng, 30);
    const HtmlNode first = parse_html(input);
    const std::string html = serialize_html(first);
    const HtmlNode second = parse_html(html);
    ASSERT_EQ(first, second) << "input: " << testutil::printable(input) << "\nserialized: " << testutil::printable(html);
  }
}

TEST(TagSet, AgreesWithLinearSearch) {
  const auto& set = html_detail::kClosesP;
  for (auto name : set.names) EXPECT_TRUE(set.contains(name)) << name;
  std::mt19937_64 rng(99);
  const std::string letters = "abcdefghilmnoprstuvx123456";
  for (int i = 0; i < 20000; ++i) {
    std::string s(rng() % 9, 'a');
    for (auto& c : s) c = letters[rng() % letters.size()];
    const bool linear = std::find(set.names.begin(), set.names.end(), s) != set.names.end();
    ASSERT_EQ(set.contains(s), linear) << s;
  }
  EXPECT_FALSE(html_detail::kVoid.contains(""));
  EXPECT_TRUE(is_void_element("br"));
  EXPECT_FALSE(is_void_element("b"));
}
