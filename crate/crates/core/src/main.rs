use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use contour_mover::trace::gallery::{case_scene_at, gallery_scene, CASES, GALLERY};
use contour_mover::trace::protocol::Session;
use contour_mover::trace::{emit_svg, load_scene, parse_trace, replay, save_scene, violations, Scene, SceneError};
use contour_mover::ContainmentPolicy;

#[derive(Parser)]
#[command(name = "contour-mover", version, about = "Replay pointer traces against contour-based scenes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolicyArg {
    /// Override the scene's containment policy: unrestricted, partly:N or inside.
    #[arg(long)]
    policy: Option<ContainmentPolicy>,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a trace and write the final scene.
    Replay {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        /// Final scene destination (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write initial.svg and final.svg here.
        #[arg(long)]
        svg_dir: Option<PathBuf>,
        /// Full replay report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        contours: bool,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Render a scene to SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long)]
        contours: bool,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// List or write the built-in scenes.
    Gallery {
        #[arg(long, conflicts_with = "emit", required_unless_present = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Also write an SVG (with contours) next to each scene.
        #[arg(long, requires = "emit")]
        svg: bool,
    },
    /// Answer JSON commands from stdin, one per line.
    Serve,
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn scene_from(path: &Path, policy: &PolicyArg) -> Result<Scene, Failure> {
    let mut scene = load_scene(&read(path)?).map_err(|e| match e {
        SceneError::Syntax { .. } => Failure::Input(format!("{}: {e}", path.display())),
        _ => Failure::Invariant(format!("{}: {e}", path.display())),
    })?;
    if let Some(p) = policy.policy {
        scene.policy = p;
    }
    Ok(scene)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Replay {
            scene,
            trace,
            out,
            svg_dir,
            report,
            contours,
            policy,
        } => {
            let start = scene_from(&scene, &policy)?;
            let events = parse_trace(&read(&trace)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", trace.display())))?;
            let r = replay(&start, &events);
            let text = save_scene(&r.final_scene);
            match &out {
                Some(p) => write(p, &text)?,
                None => io::stdout().write_all(text.as_bytes())?,
            }
            if let Some(dir) = svg_dir {
                fs::create_dir_all(&dir)?;
                write(&dir.join("initial.svg"), &emit_svg(&start, contours))?;
                write(&dir.join("final.svg"), &emit_svg(&r.final_scene, contours))?;
            }
            if let Some(p) = report {
                write(&p, &(serde_json::to_string_pretty(&r).expect("report serializes") + "\n"))?;
            }
            eprintln!(
                "{} events, {} gestures, sha256 {}",
                r.log.len(),
                r.gestures.len(),
                r.final_scene.digest()
            );
            let bad = violations(&start, &r.final_scene);
            if !bad.is_empty() {
                return Err(Failure::Invariant(bad.join("\n")));
            }
            Ok(())
        }
        Command::Render {
            scene,
            svg,
            contours,
            policy,
        } => {
            let s = scene_from(&scene, &policy)?;
            write(&svg, &emit_svg(&s, contours))
        }
        Command::Gallery { list, emit, svg } => {
            if list {
                for (i, (name, what)) in CASES.iter().enumerate() {
                    println!("{:02}  {name:<13} {what}", i + 1);
                }
                println!("--  {GALLERY:<13} all of the above on one surface");
                return Ok(());
            }
            let dir = emit.expect("clap enforces --list or --emit");
            fs::create_dir_all(&dir)?;
            let scenes = CASES
                .iter()
                .enumerate()
                .map(|(i, (name, _))| (format!("{:02}-{name}", i + 1), case_scene_at(i).expect("case exists")))
                .chain(std::iter::once((GALLERY.to_owned(), gallery_scene())));
            for (stem, scene) in scenes {
                write(&dir.join(format!("{stem}.json")), &save_scene(&scene))?;
                if svg {
                    write(&dir.join(format!("{stem}.svg")), &emit_svg(&scene, true))?;
                }
            }
            Ok(())
        }
        Command::Serve => {
            let mut session = Session::new();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for line in io::stdin().lock().lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                writeln!(out, "{}", session.handle_json(&line))?;
                out.flush()?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(3)
        }
    }
}
