//! Command-line access to the free skew monoidal category.
//!
//! Exit status: 0 on success or a true verdict, 1 on usage or parse
//! errors, 2 on a well-formed query whose verdict is false.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use fsk_core::fsk::{
    check_skew_axioms, factor_general, factor_injection, factor_surjection, hom, is_morphism,
};
use fsk_core::operads::{counit_at, h_colax, h_of, h_of_lambda, q_of};
use fsk_core::tamari::enumerate_tamari;
use fsk_core::{Error, FskMorphism, FskObject, LElement, Lbf, MembershipMode, MonotoneMap};

#[derive(Parser)]
#[command(
    name = "fsk",
    version,
    about = "Compute in the free skew monoidal category on one object"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left bracketing functions and the Tamari order.
    #[command(subcommand)]
    Tamari(TamariCmd),
    /// Objects, written as words such as `((I X) X)`.
    #[command(subcommand)]
    Obj(ObjCmd),
    /// Every morphism SRC -> DST.
    Hom { src: FskObject, dst: FskObject },
    /// Is MAP the underlying map of a morphism SRC -> DST?
    Check {
        src: FskObject,
        dst: FskObject,
        map: String,
        #[arg(long, value_enum, default_value = "direct")]
        mode: Mode,
    },
    /// The composite of MAP1: SRC -> MID and MAP2: MID -> DST.
    Compose {
        src: FskObject,
        mid: FskObject,
        dst: FskObject,
        map1: String,
        map2: String,
    },
    /// Canonical factorizations of a morphism.
    Factor {
        src: FskObject,
        dst: FskObject,
        map: String,
    },
    /// Check the skew monoidal axioms on all small instances.
    Axioms {
        #[arg(long, default_value_t = 6)]
        max_leaves: usize,
    },
    /// The left adjoint H of Q and its structure maps.
    #[command(subcommand)]
    Operad(OperadCmd),
}

#[derive(Subcommand)]
enum TamariCmd {
    /// Every lbf on ord M, lexicographically.
    Enum {
        m: usize,
    },
    Join {
        a: Lbf,
        b: Lbf,
    },
    Meet {
        a: Lbf,
        b: Lbf,
    },
    Leq {
        a: Lbf,
        b: Lbf,
    },
    /// The rbf and bracketing of an lbf.
    Show {
        a: Lbf,
    },
}

#[derive(Subcommand)]
enum ObjCmd {
    Parse { word: FskObject },
}

#[derive(Subcommand)]
enum OperadCmd {
    /// H of `tN` or `lN`.
    H { x: LElement },
    /// H(ℓ_n) -> H(t_n).
    Lambda { n: usize },
    /// The counit H Q a -> a.
    Counit { word: FskObject },
    /// H(x ∘_i y) -> H(x) ∘_i H(y), with 1-based I.
    Colax { x: LElement, i: usize, y: LElement },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Mode {
    Direct,
    ViaFactor,
    ViaSearch,
}

impl From<Mode> for MembershipMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Direct => MembershipMode::Direct,
            Mode::ViaFactor => MembershipMode::ViaFactor,
            Mode::ViaSearch => MembershipMode::ViaSearch,
        }
    }
}

/// What a command produced: text, a JSON value, and whether the verdict
/// was true.
struct Output {
    text: String,
    json: serde_json::Value,
    verdict: bool,
}

impl Output {
    fn ok(text: String, json: impl Serialize) -> Self {
        Output {
            text,
            json: serde_json::to_value(json).expect("serializable"),
            verdict: true,
        }
    }

    fn verdict(mut self, verdict: bool) -> Self {
        self.verdict = verdict;
        self
    }
}

fn object_json(o: &FskObject) -> serde_json::Value {
    json!({
        "word": o.to_string(),
        "m": o.m(),
        "u": o.u(),
        "s": o.s(),
        "grade": o.grade(),
    })
}

fn object_text(o: &FskObject) -> String {
    let u: Vec<String> = o.u().iter().map(ToString::to_string).collect();
    format!(
        "word: {o}\nm: {}\nu: {}\ns: {}\ngrade: {}",
        o.m(),
        u.join(","),
        o.s(),
        o.grade()
    )
}

fn lines<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(command: Command) -> fsk_core::Result<Output> {
    Ok(match command {
        Command::Tamari(cmd) => match cmd {
            TamariCmd::Enum { m } => {
                if m == 0 {
                    return Err(Error::Dimension("ord 0 is not an ordinal here".into()));
                }
                let all = enumerate_tamari(m);
                Output::ok(lines(&all), &all)
            }
            TamariCmd::Join { a, b } => {
                let j = a.join(&b)?;
                Output::ok(j.to_string(), &j)
            }
            TamariCmd::Meet { a, b } => {
                let j = a.meet(&b)?;
                Output::ok(j.to_string(), &j)
            }
            TamariCmd::Leq { a, b } => {
                let leq = a.leq(&b)?;
                Output::ok(leq.to_string(), json!({ "leq": leq })).verdict(leq)
            }
            TamariCmd::Show { a } => {
                let (r, tree) = (a.to_rbf(), a.to_tree());
                Output::ok(
                    format!("lbf: {a}\nrbf: {r}\ntree: {tree}"),
                    json!({ "lbf": a, "rbf": r, "tree": tree.to_string() }),
                )
            }
        },
        Command::Obj(ObjCmd::Parse { word }) => Output::ok(object_text(&word), object_json(&word)),
        Command::Hom { src, dst } => {
            let all = hom(&src, &dst);
            let maps: Vec<&MonotoneMap> = all.iter().map(FskMorphism::map).collect();
            let found = !all.is_empty();
            Output::ok(
                lines(&maps),
                json!({ "src": object_json(&src), "dst": object_json(&dst), "maps": maps }),
            )
            .verdict(found)
        }
        Command::Check {
            src,
            dst,
            map,
            mode,
        } => {
            let map = MonotoneMap::parse(&map, dst.m())?;
            if map.dom() != src.m() {
                return Err(Error::Dimension(format!(
                    "map has {} values but {src} has {} leaves",
                    map.dom(),
                    src.m()
                )));
            }
            let mode = MembershipMode::from(mode);
            let holds = is_morphism(&src, &dst, &map, mode);
            let class = holds.then(|| FskMorphism::new(src, dst, map).map(|f| f.classify()));
            let class = class.transpose()?;
            let mut text = holds.to_string();
            if let Some(c) = &class {
                text.push_str(&format!("\nclass: {}", class_text(c)));
            }
            Output::ok(
                text,
                json!({ "morphism": holds, "mode": mode, "class": class }),
            )
            .verdict(holds)
        }
        Command::Compose {
            src,
            mid,
            dst,
            map1,
            map2,
        } => {
            let f = FskMorphism::new(src, mid.clone(), MonotoneMap::parse(&map1, mid.m())?)?;
            let g = FskMorphism::new(mid, dst.clone(), MonotoneMap::parse(&map2, dst.m())?)?;
            let h = g.after(&f)?;
            Output::ok(h.to_string(), &h)
        }
        Command::Factor { src, dst, map } => {
            let map = MonotoneMap::parse(&map, dst.m())?;
            let f = FskMorphism::new(src, dst, map)?;
            let general = factor_general(&f)?;
            let class = f.classify();
            let mut text = format!(
                "surjection: {}\nmiddle: {}\ninjection: {}",
                general.surj, general.middle, general.inj
            );
            let surj = if class.is_fsk_surjection {
                let s = factor_surjection(&f)?;
                text.push_str(&format!(
                    "\nsurjection max middle: {}\nsurjection alt middle: {}",
                    s.max_middle, s.alt_middle
                ));
                Some(s)
            } else {
                None
            };
            let inj = if class.is_fsk_injection {
                let s = factor_injection(&f)?;
                text.push_str(&format!(
                    "\ninjection min middle: {}\ninjection alt middle: {}",
                    s.min_middle, s.alt_middle
                ));
                Some(s)
            } else {
                None
            };
            Output::ok(
                text,
                json!({ "general": general, "surjection": surj, "injection": inj }),
            )
        }
        Command::Axioms { max_leaves } => {
            let reports = check_skew_axioms(max_leaves)?;
            let holds = reports.iter().all(|r| r.holds());
            let text = reports
                .iter()
                .map(|r| {
                    let verdict = if r.holds() {
                        "ok".to_string()
                    } else {
                        format!("{} FAILED, first: {}", r.failures.len(), r.failures[0])
                    };
                    format!("{}: {} tuples, {verdict}", r.axiom, r.tuples)
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(text, &reports).verdict(holds)
        }
        Command::Operad(cmd) => match cmd {
            OperadCmd::H { x } => {
                let h = h_of(&x);
                Output::ok(h.to_string(), object_json(&h))
            }
            OperadCmd::Lambda { n } => {
                let f = h_of_lambda(n)?;
                Output::ok(f.to_string(), &f)
            }
            OperadCmd::Counit { word } => {
                let f = counit_at(&word)?;
                Output::ok(
                    format!("{f}\nq: {}", q_of(&word)),
                    json!({ "q": q_of(&word), "counit": f }),
                )
            }
            OperadCmd::Colax { x, i, y } => {
                let f = h_colax(&x, i, &y)?;
                Output::ok(f.to_string(), &f)
            }
        },
    })
}

fn class_text(c: &fsk_core::MorphismClass) -> String {
    let flags = [
        ("tamari", c.is_tamari),
        ("shrink", c.is_shrink),
        ("swell", c.is_swell),
        ("fsk-surjection", c.is_fsk_surjection),
        ("fsk-injection", c.is_fsk_injection),
    ];
    let names: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
    if names.is_empty() {
        "general".into()
    } else {
        names.join(" ")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
