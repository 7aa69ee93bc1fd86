//! Client for the external parser service: newline-delimited JSON requests
//! on the child's stdin, one reply line per request on its stdout.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::sync::Mutex;

use fraggen_core::normalize::ProgramParser;
use fraggen_core::AstNode;
use serde_json::{json, Value as Json};

use crate::error::{Error, Result};
use crate::estree;

/// Environment variable holding the adapter launch command.
pub const ADAPTER_ENV: &str = "FRAGGEN_ADAPTER";

struct Pipes {
    stdin: BufWriter<ChildStdin>,
    stdout: BufReader<ChildStdout>,
    next_id: u64,
}

pub struct Adapter {
    child: Child,
    pipes: Mutex<Pipes>,
}

impl Adapter {
    /// Starts `command` through `sh -c`.
    pub fn spawn(command: &str) -> Result<Adapter> {
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn()
            .map_err(|e| adapter_err("spawn", format!("{command}: {e}")))?;
        let stdin = BufWriter::new(child.stdin.take().expect("piped stdin"));
        let stdout = BufReader::new(child.stdout.take().expect("piped stdout"));
        Ok(Adapter { child, pipes: Mutex::new(Pipes { stdin, stdout, next_id: 1 }) })
    }

    /// The adapter named by `FRAGGEN_ADAPTER`, if set and non-empty.
    pub fn from_env() -> Result<Option<Adapter>> {
        match std::env::var(ADAPTER_ENV) {
            Ok(cmd) if !cmd.trim().is_empty() => Adapter::spawn(&cmd).map(Some),
            _ => Ok(None),
        }
    }

    fn request(&self, op: &str, field: &str, payload: Json) -> Result<Json> {
        let mut p = self.pipes.lock().unwrap_or_else(|e| e.into_inner());
        let id = p.next_id;
        p.next_id += 1;
        let line = serde_json::to_string(&json!({ "id": id, "op": op, field: payload }))?;
        let io = |e: std::io::Error| adapter_err("io", e.to_string());
        p.stdin.write_all(line.as_bytes()).map_err(io)?;
        p.stdin.write_all(b"\n").map_err(io)?;
        p.stdin.flush().map_err(io)?;
        let mut reply = String::new();
        if p.stdout.read_line(&mut reply).map_err(io)? == 0 {
            return Err(adapter_err("io", "adapter closed its output".into()));
        }
        let reply: Json = serde_json::from_str(&reply).map_err(|e| adapter_err("protocol", e.to_string()))?;
        if reply.get("id").and_then(Json::as_u64) != Some(id) {
            return Err(adapter_err("protocol", format!("reply id does not match request {id}")));
        }
        if reply.get("ok").and_then(Json::as_bool) == Some(true) {
            return Ok(reply);
        }
        let err = reply.get("error");
        let field = |k: &str| err.and_then(|e| e.get(k)).and_then(Json::as_str).unwrap_or("").to_string();
        let mut message = field("message");
        if let (Some(l), Some(c)) = (err.and_then(|e| e.get("line")), err.and_then(|e| e.get("col"))) {
            message = format!("{message} ({l}:{c})");
        }
        Err(Error::Adapter { kind: field("kind"), message })
    }

    pub fn parse(&self, source: &str) -> Result<AstNode> {
        let reply = self.request("parse", "source", Json::String(source.into()))?;
        let ast = reply.get("ast").ok_or_else(|| adapter_err("protocol", "reply has no ast".into()))?;
        Ok(estree::from_json(ast)?)
    }

    pub fn print(&self, ast: &AstNode) -> Result<String> {
        let reply = self.request("print", "ast", estree::to_json(ast)?)?;
        reply
            .get("source")
            .and_then(Json::as_str)
            .map(String::from)
            .ok_or_else(|| adapter_err("protocol", "reply has no source".into()))
    }
}

impl ProgramParser for Adapter {
    fn parse_program(&self, source: &str) -> Option<AstNode> {
        self.parse(source).ok()
    }
}

impl Drop for Adapter {
    fn drop(&mut self) {
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

fn adapter_err(kind: &str, message: String) -> Error {
    Error::Adapter { kind: kind.into(), message }
}
