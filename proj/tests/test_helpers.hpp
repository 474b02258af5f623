#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "pertcheck/core/rng.hpp"
#include "pertcheck/textkit/lexicon.hpp"

namespace testutil {

// Scratch directory that cleans up after itself.
struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) {
        path = std::filesystem::temp_directory_path() /
               ("pertcheck_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

// Writes a small but functional lexicon into dir and loads it. Covers the
// vocabulary used by the unit tests without touching the shipped data.
inline pertcheck::textkit::Lexicon make_mini_lexicon(const TempDir& dir,
                                                     const std::map<std::string, std::string>& overrides = {}) {
    std::map<std::string, std::string> files;
    files["synsets.tsv"] =
        "delicious\ta\ttasty\n"
        "tasty\ta\tdelicious\n"
        "big\ta\tlarge\n"
        "large\ta\tbig\n"
        "begin\tv\tstart\n"
        "start\tv\tbegin\n"
        "experiment\tn\ttrial\n"
        "trial\tn\texperiment\n";
    files["antonyms.tsv"] =
        "inspiring\ta\tuninspiring\n"
        "uninspiring\ta\tinspiring\n"
        "big\ta\tsmall\n"
        "small\ta\tbig\n";
    files["hypernyms.tsv"] =
        "musician\tn\tprofessional\n"
        "architect\tn\tprofessional\n"
        "engineer\tn\tprofessional\n"
        "experiment\tn\tinquiry\n"
        "beach\tn\tinquiry\n"
        "red\ta\tchromatic\n"
        "green\ta\tchromatic\n"
        "blue\ta\tchromatic\n"
        "small\ta\tsize\n"
        "tall\ta\tsize\n"
        "boy\tn\tperson\n"
        "girl\tn\tperson\n"
        "ball\tn\tartifact\n"
        "doll\tn\tartifact\n"
        "dog\tn\tanimal\n"
        "cat\tn\tanimal\n"
        "horse\tn\tanimal\n"
        "pandemic\tn\tevent\n"
        "vaccine\tn\tartifact\n"
        "school\tn\tinstitution\n"
        "market\tn\tinstitution\n"
        "book\tn\tartifact\n"
        "bank\tn\tinstitution\n"
        "loan\tn\tpossession\n"
        "badminton\tn\tgame\n"
        "tennis\tn\tgame\n"
        "evening\tn\ttime\n"
        "morning\tn\ttime\n"
        "taxi\tn\tvehicle\n"
        "bus\tn\tvehicle\n"
        "town\tn\tplace\n"
        "city\tn\tplace\n"
        "relative\tn\tperson\n"
        "director\tn\tprofessional\n"
        "producer\tn\tprofessional\n"
        "lady\tn\tperson\n"
        "man\tn\tperson\n"
        "tree\tn\tplant\n"
        "flight\tn\ttravel\n"
        "hour\tn\ttime\n"
        "mango\tn\tfruit\n"
        "apple\tn\tfruit\n"
        "cream\tn\tfood\n"
        "ice\tn\tfood\n"
        "play\tv\tcompete\n"
        "play\tn\tdrama\n"
        "know\tv\tthink\n"
        "bake\tv\tcook\n"
        "rain\tv\tfall\n"
        "rain\tn\tweather\n"
        "sing\tv\tperform\n"
        "ride\tv\ttravel\n"
        "riding\tn\tsport\n"
        "stand\tv\tbe\n"
        "go\tv\tmove\n"
        "meet\tv\tencounter\n"
        "born\tv\tbe\n"
        "spread\tv\tmove\n"
        "develop\tv\tmake\n"
        "enjoy\tv\tlike\n"
        "like\tv\tenjoy\n"
        "want\tv\tdesire\n"
        "need\tv\tdesire\n"
        "approve\tv\taccept\n"
        "willing\ta\tdisposed\n"
        "inspiring\ta\tquality\n"
        "new\ta\tage\n"
        "old\ta\tage\n"
        "clear\ta\tquality\n"
        "winner\tn\tperson\n"
        "contest\tn\tevent\n"
        "opportunity\tn\tchance\n"
        "adventure\tn\tevent\n";
    files["gender.tsv"] =
        "girl\tboy\nboy\tgirl\n"
        "girls\tboys\nboys\tgirls\n"
        "he\tshe\nshe\the\n"
        "man\twoman\nwoman\tman\n"
        "lady\tgentleman\ngentleman\tlady\n"
        "mother\tfather\nfather\tmother\n"
        "grandmother\tgrandfather\ngrandfather\tgrandmother\n"
        "daughter\tson\nson\tdaughter\n";
    files["contractions.tsv"] =
        "we are\twe're\n"
        "are not\taren't\n"
        "were not\tweren't\n"
        "do not\tdon't\n"
        "does not\tdoesn't\n"
        "is not\tisn't\n"
        "it is\tit's\n"
        "i am\ti'm\n"
        "will not\twon't\n"
        "cannot\tcan't\n";
    files["stopwords.txt"] =
        "a\nan\nthe\nis\nare\nwas\nwere\nbe\nbeen\nto\nof\nin\non\nat\nby\nfor\nwith\n"
        "and\nor\nbut\nnot\nno\nthis\nthat\nthese\nthose\ni\nyou\nhe\nshe\nit\nwe\nthey\n"
        "my\nyour\nhis\nher\nits\nour\ntheir\nwho\nwhom\nwhat\nwhich\nwhen\nwhere\nwhy\nhow\n"
        "do\ndoes\ndid\nwill\nwould\ncan\ncould\nhas\nhave\nhad\nso\nvery\n";
    files["verb_agreement.tsv"] =
        "doesn't\tdon't\ndon't\tdoesn't\n"
        "has\thave\nhave\thas\n"
        "is\tare\nare\tis\n"
        "was\twere\nwere\twas\n"
        "does\tdo\ndo\tdoes\n"
        "knows\tknow\n"
        "plays\tplay\n"
        "likes\tlike\n";
    files["gazetteer_person.txt"] =
        "Mary\tf\nJames\tm\nPhillips\tu\nBeethoven\tm\nTesla\tu\nAndy\tm\nRaj\tm\n"
        "Cameron\tu\nKate\tf\nRowling\tu\nAron\tm\nRalston\tu\n";
    files["gazetteer_place.txt"] = "Germany\nLondon\nTitanic\nMySpace\n";

    for (const auto& [k, v] : overrides) files[k] = v;
    for (const auto& [name, content] : files) dir.file(name, content);
    return pertcheck::textkit::Lexicon::load(dir.path.string());
}

} // namespace testutil
