#include <gtest/gtest.h>

#include <random>
#include <string>

#include "readerkit/html.hpp"
#include "readerkit/markdown.hpp"
#include "test_util.hpp"

using namespace readerkit;

namespace {

std::string md(std::string_view html, const ExtractionInstruction& instr = {}) {
  return convert(parse_html(html), instr).body;
}

void expect_body_invariants(const std::string& body) {
  if (body.empty()) return;
  EXPECT_EQ(body.back(), '\n');
  EXPECT_FALSE(body.ends_with("\n\n"));
  EXPECT_EQ(body.find("\n\n\n"), std::string::npos);
  EXPECT_NE(body.front(), '\n');
  for (const auto& line : detail::split_lines(body)) {
    if (!line.empty()) EXPECT_FALSE(detail::is_ascii_space(line.back())) << "[" << line << "]";
  }
}

}  // namespace

TEST(Convert, HeadingLevels) {
  EXPECT_EQ(md("<h1>Title</h1><h2>Sub</h2><h3>S3</h3>"), "# Title\n\n## Sub\n\n### S3\n");
}

TEST(Convert, EmptyDocument) {
  EXPECT_EQ(md(""), "");
  EXPECT_EQ(md("<html><body></body></html>"), "");
}

TEST(Convert, NavRemovedMainKept) {
  EXPECT_EQ(md("<nav>menu</nav><main><p>Hi <a href=\"/x\">y</a></p></main>"), "Hi [y](/x)\n");
}

TEST(Convert, InlineMapping) {
  EXPECT_EQ(md("<p><strong>b</strong> <em>i</em> <del>d</del> <code>c</code></p>"), "**b** *i* ~~d~~ `c`\n");
  EXPECT_EQ(md("<p><b>x</b><i>y</i><s>z</s></p>"), "**x***y*~~z~~\n");
  EXPECT_EQ(md("<p>a<br>b</p>"), "a\\\nb\n");
  EXPECT_EQ(md("<p><a>plain</a></p>"), "plain\n");
  EXPECT_EQ(md("<p><img src=\"/i.png\" alt=\"pic\"></p>"), "![pic](/i.png)\n");
  EXPECT_EQ(md("<p><code>a`b</code></p>"), "``a`b``\n");
  EXPECT_EQ(md("<p><code>`x</code></p>"), "`` `x ``\n");
}

TEST(Convert, EmphasisWhitespaceMovesOutside) {
  EXPECT_EQ(md("<p>a<b> bold </b>c</p>"), "a **bold** c\n");
  EXPECT_EQ(md("<p><del><del>x</del></del></p>"), "~~x~~\n");
}

TEST(Convert, BlockMapping) {
  EXPECT_EQ(md("<p>a</p><hr><p>b</p>"), "a\n\n---\n\nb\n");
  EXPECT_EQ(md("<blockquote><p>a</p><p>b</p></blockquote>"), "> a\n>\n> b\n");
  EXPECT_EQ(md("<pre><code class=\"language-py\">x = 1\n  y</code></pre>"), "```py\nx = 1\n  y\n```\n");
  EXPECT_EQ(md("<pre>a```b</pre>"), "````\na```b\n````\n");
}

TEST(Convert, Lists) {
  EXPECT_EQ(md("<ul><li>a</li><li>b</li></ul>"), "- a\n- b\n");
  EXPECT_EQ(md("<ol><li>a</li><li>b</li></ol>"), "1. a\n1. b\n");
  EXPECT_EQ(md("<ul><li>a<ul><li>b</li></ul></li></ul>"), "- a\n  - b\n");
  EXPECT_EQ(md("<ul><li>a<ol><li>b<ul><li>c</li></ul></li></ol></li></ul>"), "- a\n  1. b\n    - c\n");
  EXPECT_EQ(md("<ul><li>a</li><ul><li>b</li></ul></ul>"), "- a\n  - b\n");
}

TEST(Convert, Tables) {
  EXPECT_EQ(md("<table><thead><tr><th>h1</th><th>h2</th></tr></thead><tbody><tr><td>a</td><td>b</td></tr></tbody></table>"),
            "| h1 | h2 |\n| --- | --- |\n| a | b |\n");
  EXPECT_EQ(md("<table><tr><td>x</td><td>y</td></tr><tr><td>1</td><td>2</td></tr></table>"),
            "| x | y |\n| --- | --- |\n| 1 | 2 |\n");
  EXPECT_EQ(md("<table><tr><th colspan=2>h</th></tr><tr><td rowspan=2>a</td><td>b</td></tr><tr><td>c</td></tr></table>"),
            "| h | h |\n| --- | --- |\n| a | b |\n| a | c |\n");
  EXPECT_EQ(md("<table><tr><td>a|b</td></tr><tr><td>c|d</td></tr></table>"), "| a\\|b |\n| --- |\n| c\\|d |\n");
}

TEST(Convert, FigureCaptionItalic) {
  EXPECT_EQ(md("<figure><img src=\"f.png\" alt=\"F\"><figcaption>Cap</figcaption></figure>"), "![F](f.png)\n\n*Cap*\n");
}

TEST(Convert, EscapesMarkdownMetacharacters) {
  EXPECT_EQ(md("<p>*a* _b_ [c] #d</p>"), "\\*a\\* \\_b\\_ \\[c\\] \\#d\n");
  EXPECT_EQ(md("<p>- not a list</p>"), "\\- not a list\n");
  EXPECT_EQ(md("<p>1. not a list</p>"), "1\\. not a list\n");
  EXPECT_EQ(md("<p>&amp;amp;</p>"), "\\&amp;\n");
  EXPECT_EQ(md("<p>!<a href=\"u\">x</a></p>"), "\\![x](u)\n");
  EXPECT_EQ(md("<p><a href=\"a b(c)\">x</a></p>"), "[x](a%20b%28c%29)\n");
}

TEST(Convert, WhitespaceInvariants) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const std::string body = render_markdown(testutil::random_document(rng)).body;
    expect_body_invariants(body);
  }
}

TEST(StripBoilerplate, RemovesTagsAndPatterns) {
  const HtmlNode a = strip_boilerplate(parse_html("<footer>c</footer><p>k</p>"));
  ASSERT_EQ(a.children.size(), 1u);
  EXPECT_TRUE(a.children[0].is_element("p"));

  const HtmlNode b = strip_boilerplate(parse_html("<div class=\"ad-banner\">x</div><div>y</div>"));
  ASSERT_EQ(b.children.size(), 1u);
  EXPECT_EQ(inner_text(b), "y");

  const HtmlNode clean = parse_html("<div id=\"story\"><p>x <b>y</b></p></div><ul><li>z</li></ul>");
  EXPECT_EQ(strip_boilerplate(clean), clean);

  const HtmlNode c = strip_boilerplate(parse_html("<div ID=\"MainMenu\">m</div><p>k<!-- c --></p><script>s</script>"));
  EXPECT_EQ(inner_text(c), "k");
  EXPECT_EQ(count_elements(c), 2u);
}

TEST(ScoreMainContent, PrefersSemanticTags) {
  const HtmlNode root = parse_html("<div>long long long text</div><article><p>short</p></article>");
  const HtmlNode& m = score_main_content(root);
  EXPECT_TRUE(m.is_element("article"));
  const HtmlNode root2 = parse_html("<article>a</article><main>b</main>");
  EXPECT_TRUE(score_main_content(root2).is_element("main"));
}

TEST(ScoreMainContent, ProseBeatsLinkFarm) {
  const std::string prose(1000, 'p');
  const std::string links(1000, 'l');
  const HtmlNode root = parse_html("<div id=\"links\"><a href=\"/\">" + links + "</a></div><div id=\"prose\">" + prose + "</div>");
  const HtmlNode& m = score_main_content(root);
  ASSERT_NE(m.attr("id"), nullptr);
  EXPECT_EQ(*m.attr("id"), "prose");
}

TEST(ScoreMainContent, TextOnlyBodyReturnsRoot) {
  const HtmlNode root = parse_html("just some text");
  EXPECT_EQ(&score_main_content(root), &root);
}

TEST(ScoreMainContent, TieGoesToEarliest) {
  const HtmlNode root = parse_html("<div id=\"one\">abc</div><div id=\"two\">abc</div>");
  // an even split keeps the whole page
  EXPECT_EQ(&score_main_content(root), &root);
  const HtmlNode root2 = parse_html("<div id=\"w\"><div id=\"one\">abcdef</div></div>");
  EXPECT_EQ(*score_main_content(root2).attr("id"), "w");
}

TEST(ResolveScope, ScopedModeErrors) {
  const HtmlNode root = parse_html("<p>x</p>");
  EXPECT_THROW(resolve_scope(root, ExtractionInstruction::scoped({})), InstructionError);
  EXPECT_THROW(resolve_scope(root, ExtractionInstruction::scoped({Selector::parse(".none")})), ScopeEmpty);
}

TEST(ResolveScope, IncludeAndExclude) {
  const HtmlNode root = parse_html("<div class=\"a\"><p>one</p><p class=\"skip\">two</p></div><div class=\"b\"><p>three</p></div>");
  const auto instr = ExtractionInstruction::scoped({Selector::parse(".b"), Selector::parse(".a")}, {Selector::parse(".skip")});
  EXPECT_EQ(convert(root, instr).body, "one\n\nthree\n");
  // nested matches render once
  const auto nested = ExtractionInstruction::scoped({Selector::parse("div"), Selector::parse("p")});
  EXPECT_EQ(convert(root, nested).body, "one\n\ntwo\n\nthree\n");
}

TEST(Convert, StatsAndSourceId) {
  const MarkdownDoc doc = convert(parse_html("<h1>T</h1><p>a <b>b</b></p>"), {}, "doc-1");
  EXPECT_EQ(doc.source_id, "doc-1");
  EXPECT_EQ(doc.stats.element_count, 3u);
  EXPECT_EQ(doc.stats.char_count, detail::code_point_count(doc.body));
}

TEST(Convert, HeadingFidelityAllLevels) {
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = "h" + std::to_string(n);
    const std::string body = md("<" + tag + ">x <i>y</i></" + tag + ">");
    EXPECT_EQ(body, std::string(static_cast<std::size_t>(n), '#') + " x *y*\n");
  }
}

TEST(Convert, TextPreservationOnRandomTrees) {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    const HtmlNode root = testutil::random_document(rng);
    const HtmlNode scope = resolve_scope(root, {});
    const std::string body = render_markdown(scope).body;
    const std::string expected = testutil::remove_ascii_whitespace(inner_text(scope));
    const std::string actual = testutil::remove_ascii_whitespace(testutil::strip_markdown(body));
    ASSERT_EQ(actual, expected) << "html: " << testutil::printable(serialize_html(root)) << "\nmarkdown:\n" << body;
  }
}

TEST(Convert, Deterministic) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const HtmlNode root = testutil::random_document(rng);
    EXPECT_EQ(convert(root).body, convert(HtmlNode(root)).body);
  }
}

TEST(Convert, ExcludeNeverGrowsBody) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> selectors = {"p", "b", "div", ".menu", ".story", "li", "table", "h2", "a", "section p", "code"};
  for (int i = 0; i < 500; ++i) {
    const HtmlNode root = testutil::random_document(rng);
    ExtractionInstruction instr;
    std::size_t prev = convert(root, instr).body.size();
    for (int k = 0; k < 3; ++k) {
      instr.exclude.push_back(Selector::parse(testutil::choose(rng, selectors)));
      const std::size_t next = convert(root, instr).body.size();
      ASSERT_LE(next, prev) << serialize_html(root);
      prev = next;
    }
  }
}

TEST(NormalizeMarkdownWhitespace, Rules) {
  EXPECT_EQ(normalize_markdown_whitespace("\n\na  \n\n\n\nb\t\n\n"), "a\n\nb\n");
  EXPECT_EQ(normalize_markdown_whitespace("   \n"), "");
  EXPECT_EQ(normalize_markdown_whitespace("x"), "x\n");
}
