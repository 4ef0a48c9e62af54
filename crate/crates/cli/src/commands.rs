//! One function per subcommand. Each returns the text for standard output
//! and the exit code.

use serde_json::{json, Value};
use triad_core::fit::{Fitted, Witness};
use triad_core::reference::misprint_ledger;
use triad_core::{
    convolve_with_triangle, dual_basis, fit_banded, generate_named, persistent_root_polys,
    phi_from_step_matrix, solve_step_matrix, verify_triad, Family, FitResult, PolynomialSequence,
    RatTriangle, Rational, RootSequence, Slot,
};

use crate::document::OutputDocument;
use crate::error::CliError;
use crate::Format;

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

/// Everything a subcommand needs once flags are validated.
pub struct Context {
    pub family: Family,
    pub rows: usize,
    pub format: Format,
    /// `--roots` given for a family other than `lah`: use the persistent-root
    /// basis instead of the family's own dual.
    pub roots_override: Option<RootSequence<Rational>>,
}

impl Context {
    fn triangle(&self, max_row: usize) -> Result<RatTriangle, CliError> {
        Ok(generate_named(&self.family, max_row)?)
    }

    fn emit(&self, doc: &OutputDocument) -> Result<String, CliError> {
        match self.format {
            Format::Json => doc.to_json(),
            Format::Csv => doc.to_csv(),
            Format::Pretty => Ok(doc.to_pretty()),
        }
    }
}

fn coefficient_rows(phis: &PolynomialSequence<Rational>) -> Vec<Vec<Rational>> {
    phis.iter().map(|p| p.coeffs().to_vec()).collect()
}

pub fn generate(cx: &Context) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows)?;
    let doc = OutputDocument::new(tri.family(), tri.rows(), None);
    Ok(Output::ok(cx.emit(&doc)?))
}

fn basis(cx: &Context, tri: &RatTriangle) -> Result<(&'static str, PolynomialSequence<Rational>), CliError> {
    if let Some(roots) = &cx.roots_override {
        return Ok(("persistent-roots", persistent_root_polys(roots, tri.max_row())?));
    }
    let (route, phis) = dual_basis(&cx.family, tri)?;
    Ok((route.name(), phis))
}

/// `Φ_0..=Φ_N` as ascending coefficient rows.
pub fn dual(cx: &Context) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows)?;
    let (route, phis) = basis(cx, &tri)?;
    let doc = OutputDocument::new(tri.family(), &coefficient_rows(&phis), Some(json!({ "route": route })));
    Ok(Output::ok(cx.emit(&doc)?))
}

pub fn verify(cx: &Context) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows)?;
    let (route, phis) = basis(cx, &tri)?;
    let report = verify_triad(&tri, &phis);
    let code = if report.holds { 0 } else { 1 };
    let failure = report.first_failure.as_ref();
    if let Format::Json = cx.format {
        let summary = json!({
            "holds": report.holds,
            "verified_up_to": report.verified_up_to.to_string(),
            "route": route,
            "first_failure": failure.map(|(n, res)| json!({
                "n": n.to_string(),
                "residual": res.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            })),
        });
        let doc = OutputDocument::new(tri.family(), tri.rows(), Some(summary));
        return Ok(Output { stdout: doc.to_json()?, code });
    }
    let stdout = match failure {
        None => format!("holds up to n={} (dual basis: {route})\n", report.verified_up_to),
        Some((n, res)) => format!("fails at n={n}: residual {res} (dual basis: {route})\n"),
    };
    Ok(Output { stdout, code })
}

fn cell(fit: &Fitted<Rational>, slot: Slot) -> String {
    if fit.is_determined(slot) {
        fit.value(slot).to_string()
    } else {
        "*".into()
    }
}

fn equation_text(tri: &RatTriangle, n: usize, k: usize) -> String {
    let c = |n: usize, k: i64| tri.get_signed(n as i64, k);
    let k1 = k as i64;
    let mut terms = vec![format!("q_{k}*{}", c(n, k1))];
    if k > 0 {
        terms.insert(0, format!("i_{}*{}", k - 1, c(n, k1 - 1)));
    }
    terms.push(format!("d_{}*{}", k + 1, c(n, k1 + 1)));
    format!("c({},{k}) = {} = {}", n + 1, c(n + 1, k1), terms.join(" + "))
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "column": w.column.to_string(),
        "equations": w.equations.iter().map(|(n, k)| [n.to_string(), k.to_string()]).collect::<Vec<_>>(),
    })
}

pub fn fit(cx: &Context) -> Result<Output, CliError> {
    if cx.rows < 4 {
        return Err(CliError::Usage(format!(
            "fit needs --rows 4 or more (five rows), got {}",
            cx.rows
        )));
    }
    let tri = cx.triangle(cx.rows)?;
    let result = fit_banded(&tri)?;
    if let Format::Json = cx.format {
        let report = match &result {
            FitResult::Fit(fit) => {
                let col = |f: fn(usize) -> Slot| {
                    (0..=cx.rows).map(|k| cell(fit, f(k))).collect::<Vec<_>>()
                };
                json!({
                    "result": "fit",
                    "up": col(Slot::Up),
                    "stay": col(Slot::Stay),
                    "down": col(Slot::Down),
                })
            }
            FitResult::NoFit(ws) => json!({
                "result": "nofit",
                "witnesses": ws.iter().map(witness_json).collect::<Vec<_>>(),
            }),
        };
        let doc = OutputDocument::new(tri.family(), tri.rows(), Some(report));
        return Ok(Output::ok(doc.to_json()?));
    }
    let mut out = String::new();
    match &result {
        FitResult::Fit(fit) => {
            out.push_str(&format!(
                "Fit: c(n+1,k) = i_(k-1) c(n,k-1) + q_k c(n,k) + d_(k+1) c(n,k+1), rows 0..={}\n",
                cx.rows
            ));
            out.push_str("k,i_k,q_k,d_k\n");
            for k in 0..=cx.rows {
                out.push_str(&format!(
                    "{k},{},{},{}\n",
                    cell(fit, Slot::Up(k)),
                    cell(fit, Slot::Stay(k)),
                    cell(fit, Slot::Down(k))
                ));
            }
            out.push_str("(* = not determined by the given rows)\n");
        }
        FitResult::NoFit(ws) => {
            out.push_str(&format!(
                "NoFit: no time-independent banded recurrence reproduces rows 0..={}\n",
                cx.rows
            ));
            for w in ws {
                out.push_str(&format!("witness, column {}: these equations are inconsistent\n", w.column));
                for &(n, k) in &w.equations {
                    out.push_str(&format!("  {}\n", equation_text(&tri, n, k)));
                }
            }
        }
    }
    Ok(Output::ok(out))
}

/// Rows `0..=N` of the step matrix `F` with `C·F = E·C`.
pub fn solve_f(cx: &Context) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows + 1)?;
    let f = solve_step_matrix(&tri)?;
    let doc = OutputDocument::new(tri.family(), f.rows(), None);
    Ok(Output::ok(cx.emit(&doc)?))
}

/// `Φ_0..=Φ_N` from `x·Φ = F·Φ`.
pub fn phi(cx: &Context) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows)?;
    let f = solve_step_matrix(&tri)?;
    let phis = phi_from_step_matrix(&f, cx.rows)?;
    let doc = OutputDocument::new(tri.family(), &coefficient_rows(&phis), None);
    Ok(Output::ok(cx.emit(&doc)?))
}

/// `c_n = Σ_k t_{n,k} a_k b_{n-k}` for `n = 0..=N`, as a single row.
pub fn convolve(cx: &Context, a: &[Rational], b: &[Rational]) -> Result<Output, CliError> {
    let tri = cx.triangle(cx.rows)?;
    let c = convolve_with_triangle(&tri, a, b, cx.rows)?;
    let doc = OutputDocument::new(tri.family(), &[c], None);
    Ok(Output::ok(cx.emit(&doc)?))
}

/// Printed values that disagree with exact computation.
pub fn ledger(format: Format) -> Result<String, CliError> {
    let entries = misprint_ledger();
    if let Format::Json = format {
        let list: Vec<Value> = entries
            .iter()
            .map(|e| json!({
                "location": e.location,
                "printed": e.printed,
                "exact": e.exact,
                "note": e.note,
            }))
            .collect();
        return Ok(serde_json::to_string_pretty(&list)? + "\n");
    }
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!(
            "{}\n  printed: {}\n  exact:   {}\n  ({})\n",
            e.location, e.printed, e.exact, e.note
        ));
    }
    Ok(out)
}
