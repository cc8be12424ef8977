//! ASCII fallback for the Unicode glyphs used in text output.

const TABLE: &[(char, &str)] = &[
    ('φ', "phi"),
    ('χ', "chi"),
    ('ξ', "xi"),
    ('η', "eta"),
    ('λ', "lambda"),
    ('Λ', "Lambda"),
    ('μ', "mu"),
    ('ν', "nu"),
    ('κ', "kappa"),
    ('ρ', "rho"),
    ('δ', "delta"),
    ('π', "pi"),
    ('σ', "sigma"),
    ('ω', "omega"),
    ('Γ', "Gamma"),
    ('⊕', "+"),
    ('⊗', "(x)"),
    ('⊠', "[x]"),
    ('⋆', "*"),
    ('×', "x"),
    ('·', "*"),
    ('∘', "o"),
    ('−', "-"),
    ('→', "->"),
    ('≤', "<="),
    ('≅', "~="),
    ('⟨', "<"),
    ('⟩', ">"),
    ('–', "-"),
    ('…', "..."),
    ('∨', "v"),
    ('⇝', "~>"),
    ('∞', "inf"),
    ('Π', "Pi"),
];

pub fn transliterate(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        if c.is_ascii() {
            out.push(c);
        } else if let Some((_, s)) = TABLE.iter().find(|(k, _)| *k == c) {
            out.push_str(s);
        } else {
            out.push('?');
        }
    }
    out
}
