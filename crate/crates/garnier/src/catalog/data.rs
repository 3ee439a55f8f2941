//! Embedded catalog sources.
//!
//! Every text file under the catalog directory is compiled into the binary
//! so that the loader never touches the filesystem at run time.  Entries are
//! keyed by their directory-qualified name without the extension.

pub(crate) const FILES: &[(&str, &str)] = &[
    ("blowup/garnier_r1", include_str!("../../catalog/blowup/garnier_r1.txt")),
    ("blowup/garnier_r2", include_str!("../../catalog/blowup/garnier_r2.txt")),
    ("blowup/garnier_r3", include_str!("../../catalog/blowup/garnier_r3.txt")),
    ("blowup/garnier_r6", include_str!("../../catalog/blowup/garnier_r6.txt")),
    ("blowup/resolution_garnier_r1", include_str!("../../catalog/blowup/resolution_garnier_r1.txt")),
    ("blowup/resolution_garnier_r6", include_str!("../../catalog/blowup/resolution_garnier_r6.txt")),
    ("blowup/resolution_ura_r6", include_str!("../../catalog/blowup/resolution_ura_r6.txt")),
    ("blowup/ura_r4", include_str!("../../catalog/blowup/ura_r4.txt")),
    ("charts/garnier_r1", include_str!("../../catalog/charts/garnier_r1.txt")),
    ("charts/garnier_r2", include_str!("../../catalog/charts/garnier_r2.txt")),
    ("charts/garnier_r3", include_str!("../../catalog/charts/garnier_r3.txt")),
    ("charts/garnier_r4", include_str!("../../catalog/charts/garnier_r4.txt")),
    ("charts/garnier_r5", include_str!("../../catalog/charts/garnier_r5.txt")),
    ("charts/garnier_r6", include_str!("../../catalog/charts/garnier_r6.txt")),
    ("charts/pvi_r0", include_str!("../../catalog/charts/pvi_r0.txt")),
    ("charts/pvi_r1", include_str!("../../catalog/charts/pvi_r1.txt")),
    ("charts/pvi_r2", include_str!("../../catalog/charts/pvi_r2.txt")),
    ("charts/pvi_r3", include_str!("../../catalog/charts/pvi_r3.txt")),
    ("charts/pvi_r4", include_str!("../../catalog/charts/pvi_r4.txt")),
    ("charts/ura2_r1", include_str!("../../catalog/charts/ura2_r1.txt")),
    ("charts/ura2_r2", include_str!("../../catalog/charts/ura2_r2.txt")),
    ("charts/ura2_r3", include_str!("../../catalog/charts/ura2_r3.txt")),
    ("charts/ura2_r4", include_str!("../../catalog/charts/ura2_r4.txt")),
    ("charts/ura2_r5", include_str!("../../catalog/charts/ura2_r5.txt")),
    ("charts/ura2_r6", include_str!("../../catalog/charts/ura2_r6.txt")),
    ("charts/ura3_r1", include_str!("../../catalog/charts/ura3_r1.txt")),
    ("charts/ura3_r2", include_str!("../../catalog/charts/ura3_r2.txt")),
    ("charts/ura3_r3", include_str!("../../catalog/charts/ura3_r3.txt")),
    ("charts/ura3_r4", include_str!("../../catalog/charts/ura3_r4.txt")),
    ("charts/ura3_r5", include_str!("../../catalog/charts/ura3_r5.txt")),
    ("charts/ura3_r6", include_str!("../../catalog/charts/ura3_r6.txt")),
    ("charts/ura_r1", include_str!("../../catalog/charts/ura_r1.txt")),
    ("charts/ura_r2", include_str!("../../catalog/charts/ura_r2.txt")),
    ("charts/ura_r3", include_str!("../../catalog/charts/ura_r3.txt")),
    ("charts/ura_r4", include_str!("../../catalog/charts/ura_r4.txt")),
    ("charts/ura_r5", include_str!("../../catalog/charts/ura_r5.txt")),
    ("charts/ura_r6", include_str!("../../catalog/charts/ura_r6.txt")),
    ("cycles/garnier", include_str!("../../catalog/cycles/garnier.txt")),
    ("cycles/garnier_reduced", include_str!("../../catalog/cycles/garnier_reduced.txt")),
    ("cycles/ura", include_str!("../../catalog/cycles/ura.txt")),
    ("derived/inverses/garnier_r1", include_str!("../../catalog/derived/inverses/garnier_r1.txt")),
    ("derived/inverses/garnier_r2", include_str!("../../catalog/derived/inverses/garnier_r2.txt")),
    ("derived/inverses/garnier_r3", include_str!("../../catalog/derived/inverses/garnier_r3.txt")),
    ("derived/inverses/garnier_r4", include_str!("../../catalog/derived/inverses/garnier_r4.txt")),
    ("derived/inverses/garnier_r5", include_str!("../../catalog/derived/inverses/garnier_r5.txt")),
    ("derived/inverses/garnier_r6", include_str!("../../catalog/derived/inverses/garnier_r6.txt")),
    ("derived/inverses/pvi_r0", include_str!("../../catalog/derived/inverses/pvi_r0.txt")),
    ("derived/inverses/pvi_r1", include_str!("../../catalog/derived/inverses/pvi_r1.txt")),
    ("derived/inverses/pvi_r2", include_str!("../../catalog/derived/inverses/pvi_r2.txt")),
    ("derived/inverses/pvi_r3", include_str!("../../catalog/derived/inverses/pvi_r3.txt")),
    ("derived/inverses/pvi_r4", include_str!("../../catalog/derived/inverses/pvi_r4.txt")),
    ("derived/inverses/ura2_r1", include_str!("../../catalog/derived/inverses/ura2_r1.txt")),
    ("derived/inverses/ura2_r2", include_str!("../../catalog/derived/inverses/ura2_r2.txt")),
    ("derived/inverses/ura2_r3", include_str!("../../catalog/derived/inverses/ura2_r3.txt")),
    ("derived/inverses/ura2_r4", include_str!("../../catalog/derived/inverses/ura2_r4.txt")),
    ("derived/inverses/ura2_r5", include_str!("../../catalog/derived/inverses/ura2_r5.txt")),
    ("derived/inverses/ura2_r6", include_str!("../../catalog/derived/inverses/ura2_r6.txt")),
    ("derived/inverses/ura3_r1", include_str!("../../catalog/derived/inverses/ura3_r1.txt")),
    ("derived/inverses/ura3_r2", include_str!("../../catalog/derived/inverses/ura3_r2.txt")),
    ("derived/inverses/ura3_r3", include_str!("../../catalog/derived/inverses/ura3_r3.txt")),
    ("derived/inverses/ura3_r4", include_str!("../../catalog/derived/inverses/ura3_r4.txt")),
    ("derived/inverses/ura3_r5", include_str!("../../catalog/derived/inverses/ura3_r5.txt")),
    ("derived/inverses/ura3_r6", include_str!("../../catalog/derived/inverses/ura3_r6.txt")),
    ("derived/inverses/ura_r1", include_str!("../../catalog/derived/inverses/ura_r1.txt")),
    ("derived/inverses/ura_r2", include_str!("../../catalog/derived/inverses/ura_r2.txt")),
    ("derived/inverses/ura_r3", include_str!("../../catalog/derived/inverses/ura_r3.txt")),
    ("derived/inverses/ura_r4", include_str!("../../catalog/derived/inverses/ura_r4.txt")),
    ("derived/inverses/ura_r5", include_str!("../../catalog/derived/inverses/ura_r5.txt")),
    ("derived/inverses/ura_r6", include_str!("../../catalog/derived/inverses/ura_r6.txt")),
    ("derived/translation_actions", include_str!("../../catalog/derived/translation_actions.txt")),
    ("derived/ura3_system", include_str!("../../catalog/derived/ura3_system.txt")),
    ("dictionaries/alpha_of_gamma", include_str!("../../catalog/dictionaries/alpha_of_gamma.txt")),
    ("dictionaries/alpha_of_gamma_verbatim", include_str!("../../catalog/dictionaries/alpha_of_gamma_verbatim.txt")),
    ("dictionaries/conjugations", include_str!("../../catalog/dictionaries/conjugations.txt")),
    ("dictionaries/correspondence", include_str!("../../catalog/dictionaries/correspondence.txt")),
    ("dictionaries/gamma_of_alpha", include_str!("../../catalog/dictionaries/gamma_of_alpha.txt")),
    ("dictionaries/relations_b5", include_str!("../../catalog/dictionaries/relations_b5.txt")),
    ("dictionaries/relations_garnier", include_str!("../../catalog/dictionaries/relations_garnier.txt")),
    ("dictionaries/relations_pvi", include_str!("../../catalog/dictionaries/relations_pvi.txt")),
    ("dictionaries/remark", include_str!("../../catalog/dictionaries/remark.txt")),
    ("dictionaries/remark_verbatim", include_str!("../../catalog/dictionaries/remark_verbatim.txt")),
    ("maps/b5_s0", include_str!("../../catalog/maps/b5_s0.txt")),
    ("maps/b5_s1", include_str!("../../catalog/maps/b5_s1.txt")),
    ("maps/b5_s2", include_str!("../../catalog/maps/b5_s2.txt")),
    ("maps/b5_s3", include_str!("../../catalog/maps/b5_s3.txt")),
    ("maps/b5_s4", include_str!("../../catalog/maps/b5_s4.txt")),
    ("maps/b5_s5", include_str!("../../catalog/maps/b5_s5.txt")),
    ("maps/comp_r_n", include_str!("../../catalog/maps/comp_r_n.txt")),
    ("maps/comp_rp_s", include_str!("../../catalog/maps/comp_rp_s.txt")),
    ("maps/extended_t", include_str!("../../catalog/maps/extended_t.txt")),
    ("maps/fold_n", include_str!("../../catalog/maps/fold_n.txt")),
    ("maps/fold_r", include_str!("../../catalog/maps/fold_r.txt")),
    ("maps/fold_r1", include_str!("../../catalog/maps/fold_r1.txt")),
    ("maps/fold_r2", include_str!("../../catalog/maps/fold_r2.txt")),
    ("maps/fold_rp", include_str!("../../catalog/maps/fold_rp.txt")),
    ("maps/fold_s", include_str!("../../catalog/maps/fold_s.txt")),
    ("maps/fold_s1", include_str!("../../catalog/maps/fold_s1.txt")),
    ("maps/fold_s2", include_str!("../../catalog/maps/fold_s2.txt")),
    ("maps/fold_sp", include_str!("../../catalog/maps/fold_sp.txt")),
    ("maps/inv_fold_s1_printed", include_str!("../../catalog/maps/inv_fold_s1_printed.txt")),
    ("maps/inv_fold_s_printed", include_str!("../../catalog/maps/inv_fold_s_printed.txt")),
    ("maps/phi1", include_str!("../../catalog/maps/phi1.txt")),
    ("maps/phi2", include_str!("../../catalog/maps/phi2.txt")),
    ("maps/phi3", include_str!("../../catalog/maps/phi3.txt")),
    ("maps/phi4", include_str!("../../catalog/maps/phi4.txt")),
    ("maps/phi5", include_str!("../../catalog/maps/phi5.txt")),
    ("maps/phi6", include_str!("../../catalog/maps/phi6.txt")),
    ("maps/phi7", include_str!("../../catalog/maps/phi7.txt")),
    ("maps/phi8", include_str!("../../catalog/maps/phi8.txt")),
    ("maps/pi1", include_str!("../../catalog/maps/pi1.txt")),
    ("maps/pi2", include_str!("../../catalog/maps/pi2.txt")),
    ("maps/pi3", include_str!("../../catalog/maps/pi3.txt")),
    ("maps/pi4", include_str!("../../catalog/maps/pi4.txt")),
    ("maps/pi5", include_str!("../../catalog/maps/pi5.txt")),
    ("maps/pi5_verbatim", include_str!("../../catalog/maps/pi5_verbatim.txt")),
    ("maps/pi6", include_str!("../../catalog/maps/pi6.txt")),
    ("maps/pvi_pi13", include_str!("../../catalog/maps/pvi_pi13.txt")),
    ("maps/pvi_pi13_verbatim", include_str!("../../catalog/maps/pvi_pi13_verbatim.txt")),
    ("maps/pvi_s0", include_str!("../../catalog/maps/pvi_s0.txt")),
    ("maps/pvi_s1", include_str!("../../catalog/maps/pvi_s1.txt")),
    ("maps/pvi_s2", include_str!("../../catalog/maps/pvi_s2.txt")),
    ("maps/pvi_s3", include_str!("../../catalog/maps/pvi_s3.txt")),
    ("maps/pvi_s4", include_str!("../../catalog/maps/pvi_s4.txt")),
    ("maps/swap_reduced", include_str!("../../catalog/maps/swap_reduced.txt")),
    ("maps/swap_ura2", include_str!("../../catalog/maps/swap_ura2.txt")),
    ("maps/swap_ura3", include_str!("../../catalog/maps/swap_ura3.txt")),
    ("maps/u1", include_str!("../../catalog/maps/u1.txt")),
    ("maps/u2", include_str!("../../catalog/maps/u2.txt")),
    ("maps/u3", include_str!("../../catalog/maps/u3.txt")),
    ("maps/u4", include_str!("../../catalog/maps/u4.txt")),
    ("maps/u5", include_str!("../../catalog/maps/u5.txt")),
    ("maps/w1", include_str!("../../catalog/maps/w1.txt")),
    ("maps/w2", include_str!("../../catalog/maps/w2.txt")),
    ("maps/w3", include_str!("../../catalog/maps/w3.txt")),
    ("maps/w4", include_str!("../../catalog/maps/w4.txt")),
    ("maps/w5", include_str!("../../catalog/maps/w5.txt")),
    ("seeds/phi7_fixed", include_str!("../../catalog/seeds/phi7_fixed.txt")),
    ("seeds/phi8_fixed", include_str!("../../catalog/seeds/phi8_fixed.txt")),
    ("seeds/phi8_fixed_verbatim", include_str!("../../catalog/seeds/phi8_fixed_verbatim.txt")),
    ("seeds/pvi_sqrt", include_str!("../../catalog/seeds/pvi_sqrt.txt")),
    ("systems/garnier", include_str!("../../catalog/systems/garnier.txt")),
    ("systems/pvi", include_str!("../../catalog/systems/pvi.txt")),
    ("systems/ura", include_str!("../../catalog/systems/ura.txt")),
    ("systems/ura2", include_str!("../../catalog/systems/ura2.txt")),
    ("translations/t1", include_str!("../../catalog/translations/t1.txt")),
    ("translations/t2", include_str!("../../catalog/translations/t2.txt")),
    ("translations/t3", include_str!("../../catalog/translations/t3.txt")),
    ("translations/t4", include_str!("../../catalog/translations/t4.txt")),
    ("translations/t5", include_str!("../../catalog/translations/t5.txt")),
    ("translations/t6", include_str!("../../catalog/translations/t6.txt")),
    ("translations/t7", include_str!("../../catalog/translations/t7.txt")),
    ("translations/t8", include_str!("../../catalog/translations/t8.txt")),
    ("translations/t9", include_str!("../../catalog/translations/t9.txt")),
];
