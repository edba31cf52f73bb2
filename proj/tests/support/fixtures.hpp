#pragma once

#include <filesystem>
#include <string>

#include "foldse/dataset.hpp"

namespace fixtures {

inline std::filesystem::path data_path(const std::string& rel) {
  return std::filesystem::path(FOLDSE_TEST_DATA_DIR) / rel;
}

inline foldse::CsvOptions titanic_options() {
  return {{"age", "number_of_siblings_spouses", "number_of_parents_children", "fare"}, "survived", "0"};
}

// Zero-based data rows of the two passengers used in the explanation
// examples (test.csv lines 301 and 414).
constexpr std::size_t kMrJames = 299;
constexpr std::size_t kMrsJames = 412;

inline foldse::CsvOptions adult_options() {
  return {{"age", "fnlwgt", "education_num", "capital_gain", "capital_loss", "hours_per_week"}, "income", std::nullopt};
}

inline const char* const kTitanicSchema =
    "% mode: binary\n"
    "% label: 'survived'\n"
    "% classes: '0' '1'\n"
    "% positive: '0'\n"
    "% default: '1'\n"
    "% feature: 'sex' categorical\n"
    "% feature: 'age' numeric\n"
    "% feature: 'number_of_siblings_spouses' numeric\n"
    "% feature: 'number_of_parents_children' numeric\n"
    "% feature: 'fare' numeric\n"
    "% feature: 'class' categorical\n"
    "% feature: 'embarked' categorical\n";

// Reference two-rule Titanic program.
inline std::string titanic_program() {
  return std::string(kTitanicSchema) +
         "survived(X,'0') :- not sex(X,'female').\n"
         "survived(X,'0') :- class(X,'3'), sex(X,'female'), fare(X,N1), not(N1=<23.25).\n";
}

inline const char* const kAdultSchema =
    "% mode: binary\n"
    "% label: 'income'\n"
    "% classes: '<=50K' '>50K'\n"
    "% positive: '<=50K'\n"
    "% default: '>50K'\n"
    "% feature: 'age' numeric\n"
    "% feature: 'workclass' categorical\n"
    "% feature: 'fnlwgt' numeric\n"
    "% feature: 'education' categorical\n"
    "% feature: 'education_num' numeric\n"
    "% feature: 'marital_status' categorical\n"
    "% feature: 'occupation' categorical\n"
    "% feature: 'relationship' categorical\n"
    "% feature: 'race' categorical\n"
    "% feature: 'sex' categorical\n"
    "% feature: 'capital_gain' numeric\n"
    "% feature: 'capital_loss' numeric\n"
    "% feature: 'hours_per_week' numeric\n"
    "% feature: 'native_country' categorical\n";

// Reference two-rule Adult program, laid out as in the listing.
inline std::string adult_two_rules() {
  return std::string(kAdultSchema) +
         "income(X,'<=50K') :-\n"
         "        not marital_status(X,'Married-civ-spouse'),\n"
         "        capital_gain(X,N1), N1=<6849.0.\n"
         "income(X,'<=50K') :-\n"
         "        marital_status(X,'Married-civ-spouse'),\n"
         "        capital_gain(X,N1), N1=<5013.0,\n"
         "        education_num(X,N2), N2=<12.0.\n";
}

// Reference nine-clause Adult program from the earlier algorithm, with shared
// variable names across clauses and repeated comparisons on one variable.
inline std::string adult_nine_clauses() {
  return std::string(kAdultSchema) +
         "income(X,'<=50K') :-\n"
         "        not marital_status(X,'Married-civ-spouse'),\n"
         "        not ab3(X,'True').\n"
         "income(X,'<=50K') :-\n"
         "        marital_status(X,'Married-civ-spouse'),\n"
         "        education_num(X,N1), N1=<12.0, capital_gain(X,N2),\n"
         "        N2=<5013.0, not ab5(X,'True'), not ab6(X,'True').\n"
         "income(X,'<=50K') :-  occupation(X,'Farming-fishing'),\n"
         "        workclass(X,'Self-emp-not-inc'),\n"
         "        education_num(X,N1), N1>12.0, capital_gain(X,N2),\n"
         "        N2>5013.0.\n"
         "ab1(X,'True') :- not workclass(X,'Local-gov'),\n"
         "        capital_gain(X,N2), N2=<7978.0, education_num(X,N1),\n"
         "        N1=<10.0.\n"
         "ab2(X,'True') :- capital_gain(X,N2), N2>27828.0,\n"
         "        N2=<34095.0.\n"
         "ab3(X,'True') :- capital_gain(X,N2), N2>6849.0,\n"
         "        age(X,N3), N3>20.0, not ab1(X,'True'),\n"
         "        not ab2(X,'True').\n"
         "ab4(X,'True') :- workclass(X,'Local-gov'),\n"
         "        native_country(X,'United-States').\n"
         "ab5(X,'True') :- not race(X,'Amer-Indian-Eskimo'),\n"
         "        education_num(X,N1), N1=<8.0, capital_loss(X,N4),\n"
         "        N4>1735.0, N4=<1902.0, not ab4(X,'True').\n"
         "ab6(X,'True') :- occupation(X,'Tech-support'),\n"
         "        not education(X,'11th'), education_num(X,N1),\n"
         "        N1>5.0, N1=<8.0, age(X,N3), N3=<36.0.\n";
}

// bird / cat / penguin table: tweety and woody fly, polly (a penguin) and
// kitty (a cat) do not.
inline foldse::Dataset birds() {
  return foldse::load_csv_text(
      "name,bird,cat,penguin,flies\n"
      "tweety,true,false,false,yes\n"
      "woody,true,false,false,yes\n"
      "polly,true,false,true,no\n"
      "kitty,false,true,false,no\n",
      {{}, "flies", "yes"});
}

// Same table without the identifying name column.
inline foldse::Dataset birds_anonymous() {
  return foldse::load_csv_text(
      "bird,cat,penguin,flies\n"
      "true,false,false,yes\n"
      "true,false,false,yes\n"
      "true,false,true,no\n"
      "false,true,false,no\n",
      {{}, "flies", "yes"});
}

}  // namespace fixtures
