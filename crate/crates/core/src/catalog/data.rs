// Transcribed model tables. Regenerate only together with the ledger.

use super::raw::{RawFix, RawModel};

pub(crate) const MODELS: &[RawModel] = &[
    RawModel {
        code: "i12a",
        case_ii: false,
        variant: "A1",
        first: 1,
        second: 2,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(11*x1^2 + 6*x1*x2 - x2^2))", "a*x2 + b*(-6*x1^3 + 9*x1^2*x2 + 12*x1*x2^2 + x2^3)"],
        alpha: &["a", "3*b"],
        beta: &["2*a", "16*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["a", "b"], beta: &["2*a", "16*b/3"], gamma: &[], note: "map printed as alpha1=3b, beta1=16b; these reproduce the printed RHS only with b -> 3b" }),
    },
    RawModel {
        code: "ii12a",
        case_ii: true,
        variant: "A1",
        first: 1,
        second: 2,
        order: 1,
        params: &["a", "b"],
        rhs: ["a*x1 + b*(4*x1^3 + 9*x1^2*x2 - x2^3)", "a*x2 + b*(-x1^3 + 9*x1*x2^2 + 4*x2^3)"],
        alpha: &["a", "3*b/4"],
        beta: &["2*a", "4*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i12b",
        case_ii: false,
        variant: "A2",
        first: 1,
        second: 2,
        order: 3,
        params: &["a0", "a1", "a2", "a3", "b1", "b2", "b3"],
        rhs: ["a0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3 + x1*(a1 + a2*(3*x1 + x2) + a3*(3*x1 + x2)^2)", "a0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3 + x2*(a1 + a2*(3*x1 + x2) + a3*(3*x1 + x2)^2)"],
        alpha: &["-4*a0", "a1 + 4*b1", "-a2 - 4*b2", "a3 + 4*b3"],
        beta: &["0", "2*a1", "-2*a2", "2*a3"],
        gamma: &["-3*a0", "3*b1", "-3*b2", "3*b3"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii12b",
        case_ii: true,
        variant: "A2",
        first: 1,
        second: 2,
        order: 3,
        params: &["a0", "a1", "a2", "a3", "b1", "b2", "b3"],
        rhs: ["a0 + b1*(x1 + x2) + b2*(x1 + x2)^2 + b3*(x1 + x2)^3 + x1*(a1 + a2*(x1 + x2) + a3*(x1 + x2)^2)", "a0 + b1*(x1 + x2) + b2*(x1 + x2)^2 + b3*(x1 + x2)^3 + x2*(a1 + a2*(x1 + x2) + a3*(x1 + x2)^2)"],
        alpha: &["-4*a0", "a1 + 2*b1", "-a2/2 - b2", "a3/4 + b3/2"],
        beta: &["0", "2*a1", "-a2", "a3/2"],
        gamma: &["-3*a0", "3*b1/2", "-3*b2/4", "3*b3/8"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i12c",
        case_ii: false,
        variant: "A2",
        first: 2,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1*(x1 + x2) + c*x1^2*(x1 + x2)^2)", "x2*(a + b*x1*(x1 + x2) + c*x1^2*(x1 + x2)^2)"],
        alpha: &["0", "2*a", "2*b/3", "2*c/9"],
        beta: &["0", "a", "b/3", "c/9"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii12c",
        case_ii: true,
        variant: "A2",
        first: 2,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*(x1^2 + 4*x1*x2 + x2^2) + c*(x1^2 + 4*x1*x2 + x2^2)^2)", "x2*(a + b*(x1^2 + 4*x1*x2 + x2^2) + c*(x1^2 + 4*x1*x2 + x2^2)^2)"],
        alpha: &["0", "2*a", "2*b", "2*c"],
        beta: &["0", "a", "b", "c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i12d",
        case_ii: false,
        variant: "A31",
        first: 1,
        second: 2,
        order: 0,
        params: &["a", "b"],
        rhs: ["a + b*(5*x1^2 + 10*x1*x2 + x2^2)", "a + b*(17*x1^2 + 2*x1*x2 - 3*x2^2)"],
        alpha: &["-4*a", "-32*b/3"],
        beta: &["-3*a", "-3*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii12d",
        case_ii: true,
        variant: "A31",
        first: 1,
        second: 2,
        order: 0,
        params: &["a", "b"],
        rhs: ["a + b*(x1^2 - 8*x1*x2 - 5*x2^2)", "a + b*(-5*x1^2 - 8*x1*x2 + x2^2)"],
        alpha: &["-4*a", "8*b"],
        beta: &["-3*a", "9*b/4"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i13a",
        case_ii: false,
        variant: "A1",
        first: 1,
        second: 3,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(65*x1^3 + 77*x1^2*x2 - 13*x1*x2^2 - x2^3))", "a*x2 - b*(33*x1^4 + 15*x1^3*x2 - 147*x1^2*x2^2 - 27*x1*x2^3 - 2*x2^4)"],
        alpha: &["a", "-2*b"],
        beta: &["3*a", "-96*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii13a",
        case_ii: true,
        variant: "A1",
        first: 1,
        second: 3,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(x1 + x2)*(x1^2 + 5*x1*x2 - 2*x2^2))", "x2*(a + b*(x1 + x2)*(-2*x1^2 + 5*x1*x2 + x2^2))"],
        alpha: &["a", "-b/8"],
        beta: &["3*a", "-6*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i13b",
        case_ii: false,
        variant: "A2",
        first: 1,
        second: 3,
        order: 3,
        params: &["a0", "a1", "a2", "b0", "b1", "b2", "b3"],
        rhs: ["(x1^2*(a0 + a1*(3*x1 + x2) + a2*(3*x1 + x2)^2) + (7*x1 + x2)*(b0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3))/(6*x1)", "(x1*x2*(a0 + a1*(3*x1 + x2) + a2*(3*x1 + x2)^2) + (11*x1 - 3*x2)*(b0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3))/(6*x1)"],
        alpha: &["-16*b0/3", "a0/6 + 16*b1/3", "-a1/6 + 16*b2/3", "a2/6 + 16*b3/3"],
        beta: &["0", "a0/2", "-a1/2", "a2/2"],
        gamma: &["-b0", "b1", "-b2", "b3"],
        polynomial: "polynomial only if b0=b1=b2=b3=0",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["-16*b0/3", "a0/6 + 16*b1/3", "-a1/6 - 16*b2/3", "a2/6 + 16*b3/3"], beta: &["0", "a0/2", "-a1/2", "a2/2"], gamma: &["-b0", "b1", "-b2", "b3"], note: "alpha_l sign alternation (-1)^(l-1) must multiply the b_l part as well" }),
    },
    RawModel {
        code: "ii13b",
        case_ii: true,
        variant: "A2",
        first: 1,
        second: 3,
        order: 3,
        params: &["a1", "a2", "a3", "b0", "b1", "b2", "b3"],
        rhs: ["x1*(a1 + a2*(x1 + x2) + a3*(x1 + x2)^2)/6 + (x1 + 3*x2)*(b0/(x1 + x2) + b1 + b2*(x1 + x2) + b3*(x1 + x2)^2)/6", "x2*(a1 + a2*(x1 + x2) + a3*(x1 + x2)^2)/6 + (3*x1 + x2)*(b0/(x1 + x2) + b1 + b2*(x1 + x2) + b3*(x1 + x2)^2)/6"],
        alpha: &["-16*b0/3", "a1/6 + 8*b1/3", "-a2/12 - 2*b2/3", "a3/24 + b3/6"],
        beta: &["0", "-a1/4", "a2/8", "-a3/16"],
        gamma: &["-b0", "b1/2", "-b2/4", "b3/8"],
        polynomial: "polynomial iff b0=0",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["-4*b0/3", "a1/6 + 2*b1/3", "-a2/12 - b2/3", "a3/24 + b3/6"], beta: &["0", "a1/2", "-a2/4", "a3/8"], gamma: &["-b0/4", "b1/8", "-b2/16", "b3/32"], note: "alpha0=-(4/3)b0, alpha_l=-(-2)^(-l)(a_l+4b_l)/3, beta_l=-(-2)^(-l)a_l, gamma0=-b0/4, gamma_l=-(-2)^(-l)b_l/4" }),
    },
    RawModel {
        code: "i13c",
        case_ii: false,
        variant: "A2",
        first: 3,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)", "x2*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)"],
        alpha: &["0", "3*a", "-3*b", "3*c"],
        beta: &["0", "a", "-b", "c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii13c",
        case_ii: true,
        variant: "A2",
        first: 3,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)", "x2*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)"],
        alpha: &["0", "3*a", "-3*b/2", "3*c/4"],
        beta: &["0", "a", "-b/2", "c/4"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i13d",
        case_ii: false,
        variant: "A32",
        first: 1,
        second: 3,
        order: 0,
        params: &["a", "b"],
        rhs: ["(a*(7*x1 + x2) + b*(13*x1^4 + 376*x1^3*x2 + 106*x1^2*x2^2 + 16*x1*x2^3 + x2^4))/(6*x1)", "(a*(11*x1 - 3*x2) + b*(473*x1^4 + 408*x1^3*x2 - 318*x1^2*x2^2 - 48*x1*x2^3 - 3*x2^4))/(6*x1)"],
        alpha: &["-16*a/3", "256*b/3"],
        beta: &["-a", "b"],
        gamma: &[],
        polynomial: "not polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii13d",
        case_ii: true,
        variant: "A32",
        first: 1,
        second: 3,
        order: 0,
        params: &["a", "b"],
        rhs: ["a*(x1 + 3*x2)/(x1 + x2) + b*(3*x1^3 - x1^2*x2 - 15*x1*x2^2 - 3*x2^3)", "a*(3*x1 + x2)/(x1 + x2) + b*(-3*x1^3 - 15*x1^2*x2 - x1*x2^2 + 3*x2^3)"],
        alpha: &["-8*a", "-16*b"],
        beta: &["-3*a/2", "-3*b/16"],
        gamma: &[],
        polynomial: "polynomial only if a=0",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i14a",
        case_ii: false,
        variant: "A1",
        first: 1,
        second: 4,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(243*x1^4 + 648*x1^3*x2 - 106*x1^2*x2^2 - 16*x1*x2^3 - x2^4)/3)", "x2*(a - b*(243*x1^4 - 376*x1^3*x2 - 106*x1^2*x2^2 - 16*x1*x2^3 - x2^4))"],
        alpha: &["a", "b"],
        beta: &["4*a", "1024*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii14a",
        case_ii: true,
        variant: "A1",
        first: 1,
        second: 4,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(x1^4 + 6*x1^3*x2 + 16*x1^2*x2^2 - 6*x1*x2^3 - x2^4))", "x2*(a + b*(-x1^4 - 6*x1^3*x2 + 16*x1^2*x2^2 + 6*x1*x2^3 + x2^4))"],
        alpha: &["a", "b/16"],
        beta: &["4*a", "64*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i14b",
        case_ii: false,
        variant: "A2",
        first: 1,
        second: 4,
        order: 3,
        params: &["a0", "a1", "a2", "b0", "b1", "b2", "b3"],
        rhs: ["x1*(a0 + a1*(3*x1 + x2) + a2*(3*x1 + x2)^2) - (37*x1^2 + 10*x1*x2 + x2^2)*(b0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3)/(3*x1^2)", "x2*(a0 + a1*(3*x1 + x2) + a2*(3*x1 + x2)^2) - (27*x1^2 - 10*x1*x2 - x2^2)*(b0 + b1*(3*x1 + x2) + b2*(3*x1 + x2)^2 + b3*(3*x1 + x2)^3)/x1^2"],
        alpha: &["64*b0", "a0 - 64*b1", "-a1 + 64*b2", "a2 - 64*b3"],
        beta: &["0", "4*a0", "-4*a1", "4*a2"],
        gamma: &["b0", "-b1", "b2", "-b3"],
        polynomial: "polynomial only if b0=b1=b2=b3=0",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii14b",
        case_ii: true,
        variant: "A2",
        first: 1,
        second: 4,
        order: 3,
        params: &["a0", "a1", "a2", "b0", "b1", "b2", "b3"],
        rhs: ["x1*(a0 + a1*(x1 + x2) + a2*(x1 + x2)^2) + (x1^2 - 4*x1*x2 - x2^2)*(b0 + b1*(x1 + x2) + b2*(x1 + x2)^2 + b3*(x1 + x2)^3)/(x1*x2)", "x2*(a0 + a1*(x1 + x2) + a2*(x1 + x2)^2) + (-x1^2 - 4*x1*x2 + x2^2)*(b0 + b1*(x1 + x2) + b2*(x1 + x2)^2 + b3*(x1 + x2)^3)/(x1*x2)"],
        alpha: &["16*b0", "a0 - 8*b1", "-a1/2 + 4*b2", "a2/4 - 2*b3"],
        beta: &["0", "4*a0", "-2*a1", "a2"],
        gamma: &["b0/4", "-b1/8", "b2/16", "-b3/32"],
        polynomial: "polynomial only if b0=b1=b2=b3=0",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i14c",
        case_ii: false,
        variant: "A2",
        first: 4,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^3*x2 + c*x1^6*x2^2)", "x2*(a + b*x1^3*x2 + c*x1^6*x2^2)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "a", "b", "c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii14c",
        case_ii: true,
        variant: "A2",
        first: 4,
        second: 1,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*x2^2 + c*x1^4*x2^4)", "x2*(a + b*x1^2*x2^2 + c*x1^4*x2^4)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "a", "b", "c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i14d",
        case_ii: false,
        variant: "A33",
        first: 1,
        second: 4,
        order: 0,
        params: &["a", "b"],
        rhs: ["(a*(37*x1^2 + 10*x1*x2 + x2^2) + b*(2187*x1^6 - 9094*x1^5*x2 - 3991*x1^4*x2^2 - 1156*x1^3*x2^3 - 211*x1^2*x2^4 - 22*x1*x2^5 - x2^6))/(3*x1^2)", "(a*(27*x1^2 - 10*x1*x2 - x2^2) - b*(2187*x1^6 + 7290*x1^5*x2 - 3991*x1^4*x2^2 - 1156*x1^3*x2^3 - 211*x1^2*x2^4 - 22*x1*x2^5 - x2^6))/x1^2"],
        alpha: &["-64*a", "1638*b"],
        beta: &["-a", "b"],
        gamma: &[],
        polynomial: "not polynomial",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["-64*a", "16384*b"], beta: &["-a", "b"], gamma: &[], note: "alpha1 printed as \"2^14 b = 1638b\"; 2^14 = 16384 and only 16384 reproduces the printed RHS" }),
    },
    RawModel {
        code: "ii14d",
        case_ii: true,
        variant: "A33",
        first: 1,
        second: 4,
        order: 0,
        params: &["a", "b"],
        rhs: ["(a*(x1^2 - 4*x1*x2 - x2^2) + b*(x1^6 + 8*x1^5*x2 + 29*x1^4*x2^2 - 64*x1^3*x2^3 - 29*x1^2*x2^4 - 8*x1*x2^5 - x2^6))/(x1*x2)", "(a*(-x1^2 - 4*x1*x2 + x2^2) + b*(-x1^6 - 8*x1^5*x2 - 29*x1^4*x2^2 - 64*x1^3*x2^3 + 29*x1^2*x2^4 + 8*x1*x2^5 + x2^6))/(x1*x2)"],
        alpha: &["16*a", "256*b"],
        beta: &["a/4", "b/64"],
        gamma: &[],
        polynomial: "not polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i23a",
        case_ii: false,
        variant: "A1",
        first: 2,
        second: 3,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*x1^3*(3*x1^3 + 10*x1^2*x2 + 7*x1*x2^2 - 4*x2^3))", "a*x2 - b*x1^3*(2*x1^4 + 7*x1^3*x2 - 17*x1*x2^3 - 8*x2^4)"],
        alpha: &["2*a", "4*b/27"],
        beta: &["3*a", "3*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii23a",
        case_ii: true,
        variant: "A1",
        first: 2,
        second: 3,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*(x1^8 + 19*x1^7*x2 + 151*x1^6*x2^2 + 331*x1^5*x2^3 + 259*x1^4*x2^4 + 13*x1^3*x2^5 - 89*x1^2*x2^6 - 35*x1*x2^7 - 2*x2^8)/(x1^2 + x1*x2 + x2^2))", "x2*(a + b*(-2*x1^8 - 35*x1^7*x2 - 89*x1^6*x2^2 + 13*x1^5*x2^3 + 259*x1^4*x2^4 + 331*x1^3*x2^5 + 151*x1^2*x2^6 + 19*x1*x2^7 + x2^8)/(x1^2 + x1*x2 + x2^2))"],
        alpha: &["2*a", "2*b"],
        beta: &["3*a", "81*b/2"],
        gamma: &[],
        polynomial: "not polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i23b",
        case_ii: false,
        variant: "A2",
        first: 2,
        second: 3,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1*(x1 + x2) + c*x1^2*(x1 + x2)^2)", "x2*(a + b*x1*(x1 + x2) + c*x1^2*(x1 + x2)^2)"],
        alpha: &["0", "2*a", "2*b/3", "2*c/9"],
        beta: &["0", "3*a", "b", "c/3"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("i12c"),
        fix: None,
    },
    RawModel {
        code: "ii23b",
        case_ii: true,
        variant: "A2",
        first: 2,
        second: 3,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*(x1^2 + 4*x1*x2 + x2^2) + c*(x1^2 + 4*x1*x2 + x2^2)^2)", "x2*(a + b*(x1^2 + 4*x1*x2 + x2^2) + c*(x1^2 + 4*x1*x2 + x2^2)^2)"],
        alpha: &["0", "2*a", "2*b", "2*c"],
        beta: &["0", "3*a", "3*b", "3*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("ii12c"),
        fix: None,
    },
    RawModel {
        code: "i23c",
        case_ii: false,
        variant: "A2",
        first: 3,
        second: 2,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)", "x2*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)"],
        alpha: &["0", "3*a", "-3*b", "3*c"],
        beta: &["0", "2*a", "-2*b", "3*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("i13c"),
        fix: Some(RawFix::Map { alpha: &["0", "3*a", "-3*b", "3*c"], beta: &["0", "2*a", "-2*b", "2*c"], gamma: &["0", "0", "0", "0"], note: "beta3 printed as 3c; rederivation gives 2c" }),
    },
    RawModel {
        code: "ii23c",
        case_ii: true,
        variant: "A2",
        first: 3,
        second: 2,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)", "x2*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)"],
        alpha: &["0", "3*a", "-3*b/2", "3*c/4"],
        beta: &["0", "2*a", "-b", "c/2"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("ii13c"),
        fix: None,
    },
    RawModel {
        code: "i24a",
        case_ii: false,
        variant: "A1",
        first: 2,
        second: 4,
        order: 2,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*(x1^2 + 4*x1*x2 - x2^2) + c*x1^4*(x1^4 + 6*x1^3*x2 + 16*x1^2*x2^2 - 6*x1*x2^3 - x2^4))", "x2*(a - b*x1^2*(3*x1^2 - 4*x1*x2 - 3*x2^2) + c*x1^4*(-3*x1^4 - 18*x1^3*x2 + 16*x1^2*x2^2 + 18*x1*x2^3 + 3*x2^4))"],
        alpha: &["2*a", "2*b/9", "2*c/81"],
        beta: &["4*a", "16*b", "64*c"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii24a",
        case_ii: true,
        variant: "A1",
        first: 2,
        second: 4,
        order: 2,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + (b*(x1^5 + 13*x1^4*x2 + 64*x1^3*x2^2 + 8*x1^2*x2^3 - 13*x1*x2^4 - x2^5) + c*(x1^9 + 21*x1^8*x2 + 186*x1^7*x2^2 + 906*x1^6*x2^3 + 2676*x1^5*x2^4 - 84*x1^4*x2^5 - 906*x1^3*x2^6 - 186*x1^2*x2^7 - 21*x1*x2^8 - x2^9))/(x1 + x2))", "x2*(a + (b*(-x1^5 - 13*x1^4*x2 + 8*x1^3*x2^2 + 64*x1^2*x2^3 + 13*x1*x2^4 + x2^5) + c*(-x1^9 - 21*x1^8*x2 - 186*x1^7*x2^2 - 906*x1^6*x2^3 - 84*x1^5*x2^4 + 2676*x1^4*x2^5 + 906*x1^3*x2^6 + 186*x1^2*x2^7 + 21*x1*x2^8 + x2^9))/(x1 + x2))"],
        alpha: &["2*a", "2*b", "-2*c"],
        beta: &["4*a", "144*b", "-5184*c"],
        gamma: &[],
        polynomial: "not polynomial unless b=c=0",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["2*a", "2*b", "2*c"], beta: &["4*a", "144*b", "5184*c"], gamma: &[], note: "alpha2 and beta2 printed with a minus sign; rederivation gives +2c and +5184c" }),
    },
    RawModel {
        code: "i24b",
        case_ii: false,
        variant: "A2",
        first: 2,
        second: 4,
        order: 3,
        params: &["a0", "a1", "a2", "b0", "b1", "b2", "b3"],
        rhs: ["x1*(a0 + a1*x1*(x1 + x2) + a2*x1^2*(x1 + x2)^2) + (b0 + b1*x1*(x1 + x2) + b2*x1^2*(x1 + x2)^2 + b3*x1^3*(x1 + x2)^3)/x1", "x2*(a0 + a1*x1*(x1 + x2) + a2*x1^2*(x1 + x2)^2) + (2*x1 - x2)*(b0 + b1*x1*(x1 + x2) + b2*x1^2*(x1 + x2)^2 + b3*x1^3*(x1 + x2)^3)/x1^2"],
        alpha: &["12*b0", "2*a0 + 4*b1", "2*a1/3 + 4*b2/3", "2*a2/9 + 4*b3/9"],
        beta: &["0", "4*a0", "4*a1/3", "4*a2/9"],
        gamma: &["2*b0/3", "2*b1/9", "2*b2/27", "2*b3/81"],
        polynomial: "polynomial only if b0=b1=b2=b3=0",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii24b",
        case_ii: true,
        variant: "A2",
        first: 2,
        second: 4,
        order: 3,
        params: &["a0", "a1", "a2", "b0", "b1", "b2", "b3"],
        rhs: ["x1*(a0 + a1*(x1^2 + 4*x1*x2 + x2^2) + a2*(x1^2 + 4*x1*x2 + x2^2)^2 + (-2*x1^2 + 7*x1*x2 + x2^2)*(b0 + b1*(x1^2 + 4*x1*x2 + x2^2) + b2*(x1^2 + 4*x1*x2 + x2^2)^2 + b3*(x1^2 + 4*x1*x2 + x2^2)^3)/(x1*x2*(x1 + x2)))", "x2*(a0 + a1*(x1^2 + 4*x1*x2 + x2^2) + a2*(x1^2 + 4*x1*x2 + x2^2)^2 + (x1^2 + 7*x1*x2 - 2*x2^2)*(b0 + b1*(x1^2 + 4*x1*x2 + x2^2) + b2*(x1^2 + 4*x1*x2 + x2^2)^2 + b3*(x1^2 + 4*x1*x2 + x2^2)^3)/(x1*x2*(x1 + x2)))"],
        alpha: &["36*b0", "2*a0 + 36*b1", "2*a1 + 36*b2", "2*a2 + 36*b3"],
        beta: &["0", "4*a0", "4*a1", "4*a2"],
        gamma: &["2*b0", "2*b1", "2*b2", "2*b3"],
        polynomial: "polynomial only if b0=b1=b2=b3=0",
        duplicate_of: None,
        fix: Some(RawFix::Rhs { rhs: ["x1*(a0 + a1*(x1^2 + 4*x1*x2 + x2^2) + a2*(x1^2 + 4*x1*x2 + x2^2)^2) + (-2*x1^2 + 7*x1*x2 + x2^2)*(b0 + b1*(x1^2 + 4*x1*x2 + x2^2) + b2*(x1^2 + 4*x1*x2 + x2^2)^2 + b3*(x1^2 + 4*x1*x2 + x2^2)^3)/(x1*x2*(x1 + x2))", "x2*(a0 + a1*(x1^2 + 4*x1*x2 + x2^2) + a2*(x1^2 + 4*x1*x2 + x2^2)^2) + (x1^2 + 7*x1*x2 - 2*x2^2)*(b0 + b1*(x1^2 + 4*x1*x2 + x2^2) + b2*(x1^2 + 4*x1*x2 + x2^2)^2 + b3*(x1^2 + 4*x1*x2 + x2^2)^3)/(x1*x2*(x1 + x2))"], note: "bracket misplaced: x_n multiplies only the a-polynomial; no map reproduces the printed form" }),
    },
    RawModel {
        code: "i24c",
        case_ii: false,
        variant: "A2",
        first: 4,
        second: 2,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^3*x2 + c*x1^6*x2^2)", "x2*(a + b*x1^3*x2 + c*x1^6*x2^2)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "2*a", "2*b", "2*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("i14c"),
        fix: None,
    },
    RawModel {
        code: "ii24c",
        case_ii: true,
        variant: "A2",
        first: 4,
        second: 2,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*x2^2 + c*x1^4*x2^4)", "x2*(a + b*x1^2*x2^2 + c*x1^4*x2^4)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "2*a", "2*b", "2*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("ii14c"),
        fix: None,
    },
    RawModel {
        code: "i24d",
        case_ii: false,
        variant: "A31",
        first: 2,
        second: 4,
        order: 0,
        params: &["a", "b"],
        rhs: ["(a + b*x1^2*(x1^2 - 4*x1*x2 - x2^2))/x1", "(a*(2*x1 - x2) - b*x1^2*(2*x1^3 + 9*x1^2*x2 - 6*x1*x2^2 - x2^3))/x1^2"],
        alpha: &["12*a", "-48*b"],
        beta: &["2*a/3", "-2*b/27"],
        gamma: &[],
        polynomial: "not polynomial unless a=0",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii24d",
        case_ii: true,
        variant: "A31",
        first: 2,
        second: 4,
        order: 0,
        params: &["a", "b"],
        rhs: ["(a*(2*x1^2 - 7*x1*x2 - x2^2) + b*(2*x1^6 + 27*x1^5*x2 + 141*x1^4*x2^2 - 280*x1^3*x2^3 - 90*x1^2*x2^4 - 15*x1*x2^5 - x2^6))/(x1*x2*(x1 + x2))", "(a*(-x1^2 - 7*x1*x2 + 2*x2^2) + b*(-x1^6 - 15*x1^5*x2 - 90*x1^4*x2^2 - 280*x1^3*x2^3 + 141*x1^2*x2^4 + 27*x1*x2^5 + 2*x2^6))/(x1*x2*(x1 + x2))"],
        alpha: &["-36*a", "-1296*b"],
        beta: &["-2*a", "-9*b"],
        gamma: &[],
        polynomial: "not polynomial",
        duplicate_of: None,
        fix: Some(RawFix::Map { alpha: &["-36*a", "-1296*b"], beta: &["-2*a", "-2*b"], gamma: &[], note: "beta1 printed as -9b; rederivation gives -2b" }),
    },
    RawModel {
        code: "i34a",
        case_ii: false,
        variant: "A1",
        first: 3,
        second: 4,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*x1^8*(x1^4 + 16*x1^3*x2 + 106*x1^2*x2^2 + 376*x1*x2^3 - 243*x2^4))", "x2*(a - b*x1^8*(3*x1^4 + 48*x1^3*x2 + 318*x1^2*x2^2 + 104*x1*x2^3 - 729*x2^4))"],
        alpha: &["3*a", "3*b"],
        beta: &["4*a", "1024*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "ii34a",
        case_ii: true,
        variant: "A1",
        first: 3,
        second: 4,
        order: 1,
        params: &["a", "b"],
        rhs: ["x1*(a + b*x1^4*x2^4*(3*x1^4 + 18*x1^3*x2 + 16*x1^2*x2^2 - 18*x1*x2^3 - 3*x2^4))", "x2*(a + b*x1^4*x2^4*(-3*x1^4 - 18*x1^3*x2 + 16*x1^2*x2^2 + 18*x1*x2^3 + 3*x2^4))"],
        alpha: &["3*a", "3*b/16"],
        beta: &["4*a", "64*b"],
        gamma: &[],
        polynomial: "polynomial",
        duplicate_of: None,
        fix: None,
    },
    RawModel {
        code: "i34b",
        case_ii: false,
        variant: "A2",
        first: 4,
        second: 3,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^3*x2 + c*x1^6*x2^2)", "x2*(a + b*x1^3*x2 + c*x1^6*x2^2)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "3*a", "3*b", "3*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("i14c"),
        fix: None,
    },
    RawModel {
        code: "ii34b",
        case_ii: true,
        variant: "A2",
        first: 4,
        second: 3,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*x2^2 + c*x1^4*x2^4)", "x2*(a + b*x1^2*x2^2 + c*x1^4*x2^4)"],
        alpha: &["0", "4*a", "4*b", "4*c"],
        beta: &["0", "3*a", "3*b", "3*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("ii14c"),
        fix: None,
    },
    RawModel {
        code: "i34c",
        case_ii: false,
        variant: "A2",
        first: 3,
        second: 4,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)", "x2*(a + b*x1^2*(x1 + 3*x2) + c*x1^4*(x1 + 3*x2)^2)"],
        alpha: &["0", "3*a", "-3*b", "3*c"],
        beta: &["0", "4*a", "-4*b", "4*c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("i13c"),
        fix: None,
    },
    RawModel {
        code: "ii34c",
        case_ii: true,
        variant: "A2",
        first: 3,
        second: 4,
        order: 3,
        params: &["a", "b", "c"],
        rhs: ["x1*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)", "x2*(a + b*x1*x2*(x1 + x2) + c*x1^2*x2^2*(x1 + x2)^2)"],
        alpha: &["0", "3*a", "-3*b/2", "3*c/4"],
        beta: &["0", "4*a", "-2*b", "c"],
        gamma: &["0", "0", "0", "0"],
        polynomial: "polynomial",
        duplicate_of: Some("ii13c"),
        fix: None,
    },
];
