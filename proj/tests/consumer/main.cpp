#include <quaddyn/catalog.hpp>
#include <quaddyn/orbit.hpp>

#include <iostream>

int main() {
    auto r = quaddyn::portrait_of(quaddyn::QuadElem(quaddyn::Rational(-29, 16)));
    auto label = quaddyn::classify(r.portrait);
    std::cout << (label ? *label : "?") << "\n";
    return label == std::optional<std::string>("8(3)") ? 0 : 1;
}
