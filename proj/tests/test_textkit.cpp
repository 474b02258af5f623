#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <unordered_set>

#include "pertcheck/core/rng.hpp"
#include "pertcheck/textkit/entities.hpp"
#include "pertcheck/textkit/lexicon.hpp"
#include "pertcheck/textkit/numbers.hpp"
#include "pertcheck/textkit/tagger.hpp"
#include "pertcheck/textkit/tokenizer.hpp"

#include "test_helpers.hpp"

using namespace pertcheck;
using namespace pertcheck::textkit;

namespace {

std::vector<std::string> texts_of(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (const auto& t : toks) out.push_back(t.text);
    return out;
}

// Random sentence-ish strings with irregular spacing for round-trip checks.
std::string random_text(Rng& rng) {
    static const std::vector<std::string> words = {
        "We", "play", "badminton", "every", "evening", "Dr.", "don't", "We're",
        "mango", "127", "3.5", "U.S.", "ice-cream", "hello", "THE", "o'clock"};
    static const std::vector<std::string> puncts = {".", ",", "!", "?", "...", ";", "\"", "("};
    static const std::vector<std::string> gaps = {" ", "  ", "\t", " \n", ""};
    std::string out;
    std::size_t n = rng.uniform(0, 12);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.uniform(4) == 0) out += rng.pick(puncts);
        else out += rng.pick(words);
        out += rng.pick(gaps);
    }
    return out;
}

} // namespace

TEST_CASE("tokenize splits words and punctuation") {
    CHECK(texts_of(tokenize("We play badminton.")) ==
          std::vector<std::string>{"We", "play", "badminton", "."});
    CHECK(texts_of(tokenize("We're going to embark")) ==
          std::vector<std::string>{"We", "'re", "going", "to", "embark"});
    CHECK(tokenize("").empty());
}

TEST_CASE("tokenize details") {
    CHECK(texts_of(tokenize("He doesn't know.")) ==
          std::vector<std::string>{"He", "doesn't", "know", "."});
    CHECK(texts_of(tokenize("Dr. XYZ lives")) == std::vector<std::string>{"Dr.", "XYZ", "lives"});
    CHECK(texts_of(tokenize("born in 1,500 AD")) ==
          std::vector<std::string>{"born", "in", "1,500", "AD"});
    CHECK(texts_of(tokenize("wait 3.5 hours")) == std::vector<std::string>{"wait", "3.5", "hours"});
    CHECK(texts_of(tokenize("my grandmother's father")) ==
          std::vector<std::string>{"my", "grandmother", "'s", "father"});
    CHECK(texts_of(tokenize("ice-cream, please")) ==
          std::vector<std::string>{"ice-cream", ",", "please"});
    CHECK(texts_of(tokenize("J.K Rowling")) == std::vector<std::string>{"J.K", "Rowling"});
}

TEST_CASE("tokenize round-trips for arbitrary input") {
    Rng rng(20240811);
    for (int i = 0; i < 500; ++i) {
        std::string text = random_text(rng);
        auto toks = tokenize(text);
        CHECK(detokenize(toks, text) == text);
        std::size_t prev = 0;
        for (const auto& t : toks) {
            CHECK(t.begin >= prev);
            CHECK(t.begin < t.end);
            CHECK(text.substr(t.begin, t.end - t.begin) == t.text);
            for (std::size_t k = prev; k < t.begin; ++k) CHECK(is_ascii_space(text[k]));
            prev = t.end;
        }
    }
}

TEST_CASE("split_sentences") {
    auto two = split_sentences(
        "The pandemic was spreading uncontrollably. Vaccines are being developed rapidly.");
    REQUIRE(two.size() == 2);
    CHECK(split_sentences("Do you know where Dr. XYZ lives?").size() == 1);
    CHECK(split_sentences("Hello") == std::vector<std::string>{"Hello"});

    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        std::string text = random_text(rng);
        auto pieces = split_sentences(text);
        std::string joined;
        for (const auto& p : pieces) joined += p;
        CHECK(joined == text);
    }
}

TEST_CASE("pos_tag basics") {
    testutil::TempDir dir("lex_tag");
    auto lex = testutil::make_mini_lexicon(dir);

    auto tagged = pos_tag(tokenize("small boy"), lex);
    REQUIRE(tagged.tokens.size() == 2);
    CHECK(tagged.tokens[0].pos == Pos::Adj);
    CHECK(tagged.tokens[1].pos == Pos::Noun);

    tagged = pos_tag(tokenize("Who was he"), lex);
    CHECK(tagged.tokens[0].pos == Pos::Wh);
    CHECK(tagged.tokens[1].pos == Pos::Aux);
    CHECK(tagged.tokens[2].pos == Pos::Pron);

    tagged = pos_tag(tokenize("."), lex);
    CHECK(tagged.tokens[0].pos == Pos::Punct);
    CHECK(tagged.terminal_punct == std::size_t{0});

    // determinism: identical runs agree
    auto a = pos_tag(tokenize("We play badminton every evening."), lex);
    auto b = pos_tag(tokenize("We play badminton every evening."), lex);
    for (std::size_t i = 0; i < a.tokens.size(); ++i) CHECK(a.tokens[i].pos == b.tokens[i].pos);
    CHECK(a.tokens[1].pos == Pos::Verb);
}

TEST_CASE("detect_entities") {
    testutil::TempDir dir("lex_ner");
    auto lex = testutil::make_mini_lexicon(dir);

    auto t1 = detect_entities(pos_tag(tokenize("Phillips was a child prodigy."), lex), lex);
    CHECK(t1.tokens[0].entity == Entity::Person);

    auto t2 = detect_entities(pos_tag(tokenize("Why did Mary go to the school?"), lex), lex);
    bool mary_person = false;
    for (const auto& tok : t2.tokens)
        if (tok.text == "Mary") mary_person = tok.entity == Entity::Person;
    CHECK(mary_person);

    auto t3 = detect_entities(pos_tag(tokenize("the red ball"), lex), lex);
    for (const auto& tok : t3.tokens) CHECK(tok.entity == Entity::None);
}

TEST_CASE("related_words") {
    testutil::TempDir dir("lex_rel");
    auto lex = testutil::make_mini_lexicon(dir);

    auto sib = lex.related_words("musician", Pos::Noun, Relation::Sibling);
    CHECK(std::find(sib.begin(), sib.end(), "architect") != sib.end());
    CHECK(std::find(sib.begin(), sib.end(), "musician") == sib.end());

    auto syn = lex.related_words("delicious", Pos::Adj, Relation::Synonym);
    CHECK(std::find(syn.begin(), syn.end(), "tasty") != syn.end());

    CHECK(lex.related_words("xqzw", Pos::Noun, Relation::Sibling).empty());

    // sibling symmetry at the shared hypernym
    for (const char* w : {"musician", "architect", "engineer"}) {
        for (const auto& s : lex.siblings(w, Pos::Noun)) {
            auto back = lex.siblings(s, Pos::Noun);
            CHECK(std::find(back.begin(), back.end(), w) != back.end());
        }
    }
}

TEST_CASE("lexicon invariant checks") {
    testutil::TempDir dir("lex_bad");
    CHECK_THROWS_AS(testutil::make_mini_lexicon(dir, {{"gender.tsv", "boy\tgirl\n"}}),
                    InvariantViolation);
    CHECK_THROWS_AS(
        testutil::make_mini_lexicon(dir, {{"synsets.tsv", "tasty\ta\ttasty\n"}}),
        InvariantViolation);
    CHECK_THROWS_AS(Lexicon::load("/nonexistent/lexicon/dir"), ParseError);
}

TEST_CASE("number_to_words basics") {
    CHECK(number_to_words("127") == "one hundred twenty seven");
    CHECK(number_to_words("2") == "two");
    CHECK(number_to_words("0") == "zero");
    CHECK(number_to_words("1990") == "one thousand nine hundred ninety");
    CHECK(number_to_words("1,500") == "one thousand five hundred");
    CHECK(number_to_words("1000000") == "one million");
    CHECK_THROWS_AS(number_to_words("12a"), ValueError);
    CHECK_THROWS_AS(number_to_words(""), ValueError);
    CHECK_THROWS_AS(number_to_words("3.5"), ValueError);
}

TEST_CASE("number_to_words is injective on 0..999999") {
    std::unordered_set<std::string> seen;
    seen.reserve(1 << 21);
    for (int i = 0; i < 1000000; ++i) {
        bool fresh = seen.insert(number_to_words(std::to_string(i))).second;
        if (!fresh) FAIL("duplicate wording at " << i);
    }
    CHECK(seen.size() == 1000000);
}
